#include "hvsplit/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "hvsplit/numeric.hpp"

namespace hvsplit {

namespace {

OrderMatrix order_matrix_of(const std::vector<Point>& pts, int d,
                            std::uint64_t* comparisons) {
    const int n = static_cast<int>(pts.size());
    OrderMatrix om;
    om.n = n;
    om.d = d;
    om.delta.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(d), 0);

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::uint64_t cmp_count = 0;
    for (int j = 0; j < d; ++j) {
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            ++cmp_count;
            return pts[a][j] < pts[b][j];
        });
        // Every member of a tied run gets the run-start rank: equal
        // coordinates never count as dominating.
        int pos = 0;
        while (pos < n) {
            const double v = pts[idx[pos]][j];
            int run_end = pos + 1;
            while (run_end < n && pts[idx[run_end]][j] == v) ++run_end;
            for (int t = pos; t < run_end; ++t) {
                om.delta[static_cast<std::size_t>(idx[t]) * d + j] = pos;
            }
            pos = run_end;
        }
    }
    if (comparisons != nullptr) *comparisons += cmp_count;
    return om;
}

void sorted_desc_row(const OrderMatrix& om, int i, std::vector<int>& out) {
    out.resize(static_cast<std::size_t>(om.d));
    for (int j = 0; j < om.d; ++j) out[static_cast<std::size_t>(j)] = om.at(i, j);
    std::sort(out.begin(), out.end(), std::greater<int>());
}

int select_lexicographic(const OrderMatrix& om) {
    // Comparing delta rows sorted descending is equivalent to comparing
    // omega vectors read at k = n-1 down to 1: fewer high counts win,
    // and agreement over k >= 1 forces agreement at k = 0.
    int winner = 0;
    std::vector<int> best;
    std::vector<int> current;
    sorted_desc_row(om, 0, best);
    for (int i = 1; i < om.n; ++i) {
        sorted_desc_row(om, i, current);
        if (current < best) {
            winner = i;
            best.swap(current);
        }
    }
    return winner;
}

int select_scan(const OrderMatrix& om) {
    const int n = om.n;
    int winner = 0;
    std::vector<int> incumbent(static_cast<std::size_t>(n), n);  // above any count
    std::vector<int> covered(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::fill(covered.begin(), covered.end(), 0);
        for (int j = 0; j < om.d; ++j) ++covered[static_cast<std::size_t>(om.at(i, j))];
        for (int k = n - 1; k >= 0; --k) {
            if (covered[static_cast<std::size_t>(k)] <
                incumbent[static_cast<std::size_t>(k)]) {
                winner = i;
                incumbent = covered;
                break;
            }
        }
    }
    return winner;
}

/**
 * Emits the child at dimension j, if any point lies strictly below the
 * split point there, and clamps those points' j-th coordinates in the
 * working set. Child copies are taken before the clamp at j but after
 * clamps at earlier dimensions.
 */
std::optional<SubproblemFrame> cut_dimension(std::vector<Point>& working,
                                             int split_idx, int j,
                                             const RefPoint& parent_ref) {
    const double split_j = working[static_cast<std::size_t>(split_idx)][j];
    SubproblemFrame child;
    const int n = static_cast<int>(working.size());
    for (int i = 0; i < n; ++i) {
        if (i == split_idx) continue;
        Point& p = working[static_cast<std::size_t>(i)];
        if (p[j] < split_j) {
            child.points.push_back(p);
            p[j] = split_j;
        }
    }
    if (child.points.empty()) return std::nullopt;
    child.ref = parent_ref;
    child.ref[j] = split_j;
    return child;
}

struct RecursionContext {
    const CalcOptions& opts;
    RecursionStats& stats;
    std::size_t live_points = 0;
};

double calc_recursive(SubproblemFrame frame, int depth, RecursionContext& ctx) {
    RecursionStats& st = ctx.stats;
    ++st.calls;
    st.max_depth = std::max(st.max_depth, depth);
    const std::size_t frame_size = frame.points.size();
    ctx.live_points += frame_size;
    st.peak_live_points = std::max(st.peak_live_points, ctx.live_points);

    double result = 0.0;
    const int n = static_cast<int>(frame_size);
    if (n == 1) {
        result = box_volume(frame.points[0], frame.ref);
    } else if (n > 1) {
        const int d = frame.ref.dim();
        const OrderMatrix order = order_matrix_of(frame.points, d, &st.comparisons);
        const SplitDecision split = select_split(order, ctx.opts.split_rule);

        // One live child at a time: build, measure, discard.
        CompensatedSum volume;
        for (int j = 0; j < d; ++j) {
            auto child = cut_dimension(frame.points, split.split_index, j, frame.ref);
            if (!child) continue;
            if (ctx.opts.prune_dominated_children) {
                child->points = pareto_filter(child->points).points;
            }
            if (ctx.opts.collect_stats) {
                ++st.child_sizes[static_cast<int>(child->points.size())];
            }
            volume.add(calc_recursive(std::move(*child), depth + 1, ctx));
        }
        // The split point is never clamped; its own box closes the parent.
        volume.add(box_volume(frame.points[static_cast<std::size_t>(split.split_index)],
                              frame.ref));
        result = volume.value();
    }

    ctx.live_points -= frame_size;
    return result;
}

}  // namespace

OrderMatrix compute_order_matrix(const Front& front) {
    if (front.n() == 0) throw Error("compute_order_matrix: empty front");
    for (const Point& p : front.points) {
        if (p.dim() != front.dimension) {
            throw DimensionMismatch("compute_order_matrix: point dimension " +
                                    std::to_string(p.dim()) + " vs front " +
                                    std::to_string(front.dimension));
        }
    }
    return order_matrix_of(front.points, front.dimension, nullptr);
}

OmegaRow omega_histogram(const OrderMatrix& order, int i) {
    if (i < 0 || i >= order.n) {
        throw Error("omega_histogram: point index " + std::to_string(i) +
                    " out of range for n=" + std::to_string(order.n));
    }
    OmegaRow omega(static_cast<std::size_t>(order.n), 0);
    for (int j = 0; j < order.d; ++j) {
        ++omega[static_cast<std::size_t>(order.at(i, j))];
    }
    return omega;
}

SplitDecision select_split(const OrderMatrix& order, SplitRule rule) {
    if (order.n < 2) {
        throw Error("select_split: need at least 2 points, got " +
                    std::to_string(order.n));
    }
    const int winner = rule == SplitRule::kLexicographic ? select_lexicographic(order)
                                                         : select_scan(order);
    return SplitDecision{winner, omega_histogram(order, winner)};
}

std::vector<SubproblemFrame> split_children(const SubproblemFrame& frame,
                                            const SplitDecision& split) {
    const int n = static_cast<int>(frame.points.size());
    if (n < 2) throw Error("split_children: need at least 2 points");
    if (split.split_index < 0 || split.split_index >= n) {
        throw Error("split_children: split index out of range");
    }

    std::vector<SubproblemFrame> children;
    std::vector<Point> working = frame.points;
    for (int j = 0; j < frame.ref.dim(); ++j) {
        auto child = cut_dimension(working, split.split_index, j, frame.ref);
        if (child) children.push_back(std::move(*child));
    }
    return children;
}

CalcResult calc_volume(const Front& front, const RefPoint& r,
                       const CalcOptions& options) {
    if (r.dim() != front.dimension) {
        throw DimensionMismatch("calc_volume: reference dimension " +
                                std::to_string(r.dim()) + " vs front " +
                                std::to_string(front.dimension));
    }
    for (int j = 0; j < r.dim(); ++j) {
        if (!std::isfinite(r[j])) {
            throw ReferenceBoundViolation(
                "calc_volume: reference coordinate " + std::to_string(j) +
                " is not finite");
        }
    }
    for (int i = 0; i < front.n(); ++i) {
        const Point& p = front.points[static_cast<std::size_t>(i)];
        if (p.dim() != front.dimension) {
            throw DimensionMismatch("calc_volume: points[" + std::to_string(i) +
                                    "] has dimension " + std::to_string(p.dim()) +
                                    " vs front " + std::to_string(front.dimension));
        }
        for (int j = 0; j < p.dim(); ++j) {
            if (!std::isfinite(p[j]) || p[j] > r[j]) {
                throw ReferenceBoundViolation(
                    "calc_volume: points[" + std::to_string(i) +
                    "] breaks the reference bound at dimension " + std::to_string(j));
            }
        }
    }

    CalcResult result;
    RecursionContext ctx{options, result.stats};
    result.volume = calc_recursive(SubproblemFrame{front.points, r}, 1, ctx);
    return result;
}

}  // namespace hvsplit
