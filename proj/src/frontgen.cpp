#include "hvsplit/frontgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hvsplit/rng.hpp"

namespace hvsplit {

namespace {

constexpr long long kCandidateBudget = 1LL << 20;

bool shares_a_coordinate(const Point& p, const std::vector<Point>& accepted) {
    for (const Point& q : accepted) {
        for (int j = 0; j < p.dim(); ++j) {
            if (p[j] == q[j]) return true;
        }
    }
    return false;
}

/// Exponential draws normalized to unit sum (norm_l2 = false) or unit
/// Euclidean norm (norm_l2 = true); resampled on exact coordinate
/// collision so no column of the front carries a tie.
std::vector<Point> normalized_positive_points(int n, int d, SplitMix64& rng,
                                              bool norm_l2, const char* who) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    long long attempts = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++attempts > kCandidateBudget) {
            throw GenError(std::string(who) + ": exhausted the resampling budget");
        }
        Point p;
        p.coords.resize(static_cast<std::size_t>(d));
        double norm = 0.0;
        for (int j = 0; j < d; ++j) {
            const double e = -std::log1p(-rng.next_unit());
            p[j] = e;
            norm += norm_l2 ? e * e : e;
        }
        if (norm_l2) norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (int j = 0; j < d; ++j) p[j] /= norm;
        if (shares_a_coordinate(p, pts)) continue;
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<Point> permutation_symmetric_points(int n) {
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pts[static_cast<std::size_t>(i)].coords.assign(static_cast<std::size_t>(n), 1.0);
        pts[static_cast<std::size_t>(i)][i] = 0.0;
    }
    return pts;
}

/// Draw-filter loop shared by the filtered families: draw a batch, keep
/// the non-dominated survivors, double the batch until n of them exist.
template <typename DrawPoint>
std::vector<Point> filtered_points(int n, SplitMix64& rng, DrawPoint draw,
                                   const char* who) {
    int batch = std::max(4 * n, 32);
    long long drawn = 0;
    for (;;) {
        if (drawn + batch > kCandidateBudget) {
            throw GenError(std::string(who) +
                           ": could not reach " + std::to_string(n) +
                           " non-dominated survivors within the candidate budget; "
                           "use a smaller n or a construction-based family");
        }
        std::vector<Point> candidates;
        candidates.reserve(static_cast<std::size_t>(batch));
        for (int i = 0; i < batch; ++i) candidates.push_back(draw(rng));
        drawn += batch;

        Front survivors = pareto_filter(candidates);
        if (survivors.n() >= n) {
            survivors.points.resize(static_cast<std::size_t>(n));
            return std::move(survivors.points);
        }
        batch *= 2;
    }
}

}  // namespace

GeneratedFront generate(const GenSpec& spec) {
    if (spec.n < 1) throw GenError("generate: n must be at least 1");
    if (spec.d < 2) throw GenError("generate: d must be at least 2");
    if (!(spec.ref_margin >= 0.0)) {
        throw GenError("generate: reference margin must be non-negative");
    }
    if (spec.family == Family::kPermutationSymmetric && spec.n != spec.d) {
        throw GenError("generate: permutation-symmetric fronts need n = d, got n=" +
                       std::to_string(spec.n) + " d=" + std::to_string(spec.d));
    }

    SplitMix64 rng(spec.seed);
    const int n = spec.n;
    const int d = spec.d;

    std::vector<Point> pts;
    switch (spec.family) {
        case Family::kSimplex:
            pts = normalized_positive_points(n, d, rng, false, "simplex");
            break;
        case Family::kSphere:
            pts = normalized_positive_points(n, d, rng, true, "sphere");
            break;
        case Family::kPermutationSymmetric:
            pts = permutation_symmetric_points(n);
            break;
        case Family::kUniformFiltered:
            pts = filtered_points(
                n, rng,
                [d](SplitMix64& g) {
                    Point p;
                    p.coords.resize(static_cast<std::size_t>(d));
                    for (int j = 0; j < d; ++j) p[j] = g.next_unit();
                    return p;
                },
                "uniform-filtered");
            break;
        case Family::kTiedCoordinates: {
            // Coarse grid: few distinct values per dimension, so distinct
            // points still share coordinates.
            const double grid = std::max(4, std::max(n, d));
            pts = filtered_points(
                n, rng,
                [d, grid](SplitMix64& g) {
                    Point p;
                    p.coords.resize(static_cast<std::size_t>(d));
                    double sum = 0.0;
                    for (int j = 0; j < d; ++j) {
                        p[j] = -std::log1p(-g.next_unit());
                        sum += p[j];
                    }
                    if (sum == 0.0) sum = 1.0;
                    for (int j = 0; j < d; ++j) {
                        p[j] = std::round(p[j] / sum * grid) / grid;
                    }
                    return p;
                },
                "tied-coordinates");
            break;
        }
    }

    GeneratedFront out;
    out.front = Front{d, std::move(pts)};
    out.ref.coords.assign(static_cast<std::size_t>(d),
                          -std::numeric_limits<double>::infinity());
    for (const Point& p : out.front.points) {
        for (int j = 0; j < d; ++j) out.ref[j] = std::max(out.ref[j], p[j]);
    }
    for (int j = 0; j < d; ++j) out.ref[j] += spec.ref_margin;
    return out;
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::kSimplex: return "simplex";
        case Family::kSphere: return "sphere";
        case Family::kUniformFiltered: return "uniform-filtered";
        case Family::kPermutationSymmetric: return "permutation-symmetric";
        case Family::kTiedCoordinates: return "tied-coordinates";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : all_families()) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = {
        Family::kSimplex, Family::kSphere, Family::kUniformFiltered,
        Family::kPermutationSymmetric, Family::kTiedCoordinates};
    return families;
}

}  // namespace hvsplit
