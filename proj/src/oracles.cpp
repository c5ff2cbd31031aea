#include "hvsplit/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "hvsplit/numeric.hpp"
#include "hvsplit/rng.hpp"

namespace hvsplit {

namespace {

void require_valid(const Front& front, const RefPoint& r, const char* who) {
    const ValidationReport report = validate(front, r);
    if (!report.ok()) {
        throw ReferenceBoundViolation(std::string(who) + ": " + report.summary());
    }
}

/// Signed volume of one subset term: prod_j (r_j - max_{i in mask} y_ij),
/// positive for odd subsets.
double subset_term(const std::vector<Point>& pts, const RefPoint& r,
                   std::uint64_t mask, std::vector<double>& max_buf) {
    const int d = r.dim();
    max_buf.assign(static_cast<std::size_t>(d),
                   -std::numeric_limits<double>::infinity());
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(m));
        for (int j = 0; j < d; ++j) {
            max_buf[static_cast<std::size_t>(j)] =
                std::max(max_buf[static_cast<std::size_t>(j)], pts[i][j]);
        }
    }
    double prod = 1.0;
    for (int j = 0; j < d; ++j) prod *= r[j] - max_buf[static_cast<std::size_t>(j)];
    return std::popcount(mask) % 2 == 1 ? prod : -prod;
}

void check_cap(int n, int max_points) {
    if (n > max_points) throw SubsetCapExceeded(n, max_points);
    if (n >= 63) {  // guards the subset-counter shift
        throw SubsetCapExceeded(n, 62);
    }
}

}  // namespace

double hv_inclusion_exclusion_serial(const Front& front, const RefPoint& r,
                                     int max_points) {
    check_cap(front.n(), max_points);
    require_valid(front, r, "hv_inclusion_exclusion");
    const long long subsets = (1LL << front.n()) - 1;
    std::vector<double> max_buf;
    CompensatedSum total;
    for (long long mask = 1; mask <= subsets; ++mask) {
        total.add(subset_term(front.points, r, static_cast<std::uint64_t>(mask),
                              max_buf));
    }
    return total.value();
}

double hv_inclusion_exclusion(const Front& front, const RefPoint& r,
                              int max_points) {
    check_cap(front.n(), max_points);
    // Below ~4k subsets the parallel region costs more than it saves.
    if (front.n() < 12) return hv_inclusion_exclusion_serial(front, r, max_points);
    require_valid(front, r, "hv_inclusion_exclusion");

    const long long subsets = (1LL << front.n()) - 1;
    CompensatedSum total;
#pragma omp parallel
    {
        // cache-line padding keeps the threads' scratch buffers apart
        std::vector<double> max_buf(static_cast<std::size_t>(r.dim()) + 8);
        CompensatedSum local;
#pragma omp for schedule(static) nowait
        for (long long mask = 1; mask <= subsets; ++mask) {
            local.add(subset_term(front.points, r,
                                  static_cast<std::uint64_t>(mask), max_buf));
        }
#pragma omp critical
        total.add(local.value());
    }
    return total.value();
}

double hv_sweep_2d(const Front& front, const RefPoint& r) {
    if (front.dimension != 2 || r.dim() != 2) {
        throw DimensionMismatch("hv_sweep_2d: needs a 2-dimensional front, got " +
                                std::to_string(front.dimension));
    }
    require_valid(front, r, "hv_sweep_2d");

    std::vector<Point> pts = pareto_filter(front.points).points;
    if (pts.empty()) return 0.0;
    // After filtering, first coordinates are distinct and second
    // coordinates strictly descend.
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a[0] < b[0]; });

    double volume = 0.0;
    const int m = static_cast<int>(pts.size());
    for (int i = 0; i < m; ++i) {
        const double x_next = i + 1 < m ? pts[static_cast<std::size_t>(i) + 1][0] : r[0];
        volume += (x_next - pts[static_cast<std::size_t>(i)][0]) *
                  (r[1] - pts[static_cast<std::size_t>(i)][1]);
    }
    return volume;
}

namespace {

struct McSetup {
    Point lower;
    double measure = 0.0;
    bool degenerate = false;
};

McSetup mc_setup(const Front& front, const RefPoint& r,
                 const std::optional<Point>& lower) {
    McSetup setup;
    if (lower.has_value()) {
        setup.lower = *lower;
        if (setup.lower.dim() != front.dimension) {
            throw DimensionMismatch("hv_monte_carlo: lower corner dimension " +
                                    std::to_string(setup.lower.dim()) + " vs front " +
                                    std::to_string(front.dimension));
        }
        for (const Point& p : front.points) {
            for (int j = 0; j < p.dim(); ++j) {
                if (setup.lower[j] > p[j]) {
                    throw Error("hv_monte_carlo: lower corner exceeds a front point "
                                "at dimension " + std::to_string(j));
                }
            }
        }
    } else {
        setup.lower.coords.assign(static_cast<std::size_t>(front.dimension),
                                  std::numeric_limits<double>::infinity());
        for (const Point& p : front.points) {
            for (int j = 0; j < p.dim(); ++j) {
                setup.lower[j] = std::min(setup.lower[j], p[j]);
            }
        }
    }

    double measure = 1.0;
    for (int j = 0; j < r.dim(); ++j) measure *= r[j] - setup.lower[j];
    setup.measure = measure;
    setup.degenerate = measure == 0.0;
    return setup;
}

/// Did sample s land in the region dominated by the front?
bool sample_hit(const std::vector<Point>& pts, const RefPoint& r,
                const Point& lower, std::uint64_t seed, std::uint64_t s,
                std::vector<double>& coord_buf) {
    const int d = r.dim();
    for (int j = 0; j < d; ++j) {
        const double u = SplitMix64::unit_at(seed, s * static_cast<std::uint64_t>(d) +
                                                       static_cast<std::uint64_t>(j));
        coord_buf[static_cast<std::size_t>(j)] = lower[j] + (r[j] - lower[j]) * u;
    }
    for (const Point& p : pts) {
        bool dominated = true;
        for (int j = 0; j < d; ++j) {
            if (p[j] > coord_buf[static_cast<std::size_t>(j)]) {
                dominated = false;
                break;
            }
        }
        if (dominated) return true;
    }
    return false;
}

McEstimate mc_run(const Front& front, const RefPoint& r, std::uint64_t samples,
                  std::uint64_t seed, const std::optional<Point>& lower,
                  bool parallel) {
    if (samples == 0) throw Error("hv_monte_carlo: sample count must be positive");
    require_valid(front, r, "hv_monte_carlo");
    if (front.n() == 0) return McEstimate{0.0, 0.0, samples, seed};

    const McSetup setup = mc_setup(front, r, lower);
    if (setup.degenerate) return McEstimate{0.0, 0.0, samples, seed};

    std::uint64_t hits = 0;
    if (parallel) {
#pragma omp parallel
        {
            // padded past a cache line; see the subset kernel
            std::vector<double> coord_buf(static_cast<std::size_t>(r.dim()) + 8);
            std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
            for (long long s = 0; s < static_cast<long long>(samples); ++s) {
                local += sample_hit(front.points, r, setup.lower, seed,
                                    static_cast<std::uint64_t>(s), coord_buf)
                             ? 1
                             : 0;
            }
#pragma omp atomic
            hits += local;
        }
    } else {
        std::vector<double> coord_buf(static_cast<std::size_t>(r.dim()));
        for (std::uint64_t s = 0; s < samples; ++s) {
            hits += sample_hit(front.points, r, setup.lower, seed, s, coord_buf) ? 1 : 0;
        }
    }

    const double fraction =
        static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate est;
    est.mean = setup.measure * fraction;
    est.std_error = setup.measure * std::sqrt(fraction * (1.0 - fraction) /
                                              static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

}  // namespace

McEstimate hv_monte_carlo(const Front& front, const RefPoint& r,
                          std::uint64_t samples, std::uint64_t seed,
                          const std::optional<Point>& lower) {
    return mc_run(front, r, samples, seed, lower, true);
}

McEstimate hv_monte_carlo_serial(const Front& front, const RefPoint& r,
                                 std::uint64_t samples, std::uint64_t seed,
                                 const std::optional<Point>& lower) {
    return mc_run(front, r, samples, seed, lower, false);
}

}  // namespace hvsplit
