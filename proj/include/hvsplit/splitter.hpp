/**
 * @file splitter.hpp
 * @brief Recursive vertex-splitting hypervolume computation.
 *
 * The region dominated by a front and bounded by the reference point is
 * measured by picking a splitting point, cutting the region at that point
 * along every dimension where some other point lies strictly below it,
 * and recursing into the child regions. Sequential clamping makes the
 * children pairwise volume-disjoint, so child volumes plus the splitting
 * point's own box sum exactly to the parent volume.
 *
 * A single computation is internally sequential: children are built,
 * measured and discarded one at a time, depth-first, so live storage
 * grows with recursion depth rather than with the child count. Distinct
 * computations are safe to run concurrently.
 */

#ifndef HVSPLIT_SPLITTER_HPP
#define HVSPLIT_SPLITTER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hvsplit/core.hpp"

namespace hvsplit {

/**
 * Strict-dominance counts per point and dimension:
 * delta(i, j) = number of points strictly smaller than point i at
 * dimension j. Ties do not count. Entries lie in [0, n-1].
 */
struct OrderMatrix {
    int n = 0;
    int d = 0;
    std::vector<int> delta;  // row-major n*d

    [[nodiscard]] int at(int i, int j) const {
        return delta[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                     static_cast<std::size_t>(j)];
    }

    /// Sum of row i; at least n-1 on validated non-comparable fronts.
    [[nodiscard]] long long row_sum(int i) const {
        long long s = 0;
        for (int j = 0; j < d; ++j) s += at(i, j);
        return s;
    }
};

/// omega[k] = number of dimensions at which exactly k points strictly
/// beat the owning point. Length n; entries sum to d.
using OmegaRow = std::vector<int>;

/// How the splitting point is chosen among the candidates.
enum class SplitRule {
    /// Point whose omega vector read at k = n-1, n-2, ..., 1 is
    /// lexicographically minimal; lowest index wins full ties.
    kLexicographic,
    /// Single pass that re-selects on the first k (from n-1 down) where
    /// the candidate's count drops below the incumbent's, never stopping
    /// on a higher count. Kept for study; may pick a different point
    /// than kLexicographic, the volume is unaffected.
    kScan,
};

struct SplitDecision {
    int split_index = 0;  ///< index into the frame's point list
    OmegaRow omega;       ///< the winning point's histogram
};

/// One (sub)problem: points, possibly carrying clamps from enclosing
/// cuts, plus the reference corner. Every point is <= ref componentwise.
struct SubproblemFrame {
    std::vector<Point> points;
    RefPoint ref;
};

/// Empirical trace of one computation.
struct RecursionStats {
    std::uint64_t calls = 0;       ///< invocations of the recursive procedure
    int max_depth = 0;             ///< deepest level, root = 1
    std::uint64_t comparisons = 0; ///< coordinate comparisons in order-matrix builds
    /// Maximum total point count held across the live recursion path.
    std::size_t peak_live_points = 0;
    /// Child subproblem size -> how many children of that size were
    /// recursed into (after pruning, when pruning is on). Only filled
    /// when CalcOptions::collect_stats is set.
    std::map<int, std::uint64_t> child_sizes;
};

struct CalcOptions {
    /// Remove weakly dominated points from each child before recursing.
    /// The returned volume is unchanged up to floating-point summation
    /// order; subproblems shrink. Also collapses the duplicate copies
    /// clamping can create.
    bool prune_dominated_children = true;
    /// Fill RecursionStats::child_sizes (the scalar counters are always
    /// maintained; the histogram is the only part that allocates).
    bool collect_stats = true;
    SplitRule split_rule = SplitRule::kLexicographic;
};

struct CalcResult {
    double volume = 0.0;
    RecursionStats stats;
};

/**
 * Builds the order matrix of a nonempty front by per-dimension sorting
 * with tie-aware rank assignment: every member of a tied run receives the
 * rank of the run's first element, so equal coordinates never count as
 * dominating.
 */
OrderMatrix compute_order_matrix(const Front& front);

/// Histogram row of point @p i: omega[k] = |{j : delta(i,j) = k}|.
OmegaRow omega_histogram(const OrderMatrix& order, int i);

/**
 * Chooses the splitting point for a subproblem with n >= 2 points.
 * See SplitRule for the two selection strategies.
 */
SplitDecision select_split(const OrderMatrix& order,
                           SplitRule rule = SplitRule::kLexicographic);

/**
 * Cuts a frame with n >= 2 points at the chosen splitting point.
 *
 * Dimensions are processed in ascending order. At each dimension j where
 * some point lies strictly below the split point, a child frame is
 * emitted containing copies of every such point (carrying clamps applied
 * at earlier dimensions) with the child reference equal to the parent
 * reference except ref_j = split_j; afterwards those points' j-th
 * coordinates are clamped to split_j in the working set. A point equal
 * to the split coordinate at j joins no child at j.
 *
 * The children plus the split point's own box partition the parent
 * region; dimensions nobody beats the split point at emit nothing.
 */
std::vector<SubproblemFrame> split_children(const SubproblemFrame& frame,
                                            const SplitDecision& split);

/**
 * Hypervolume of the region weakly dominated by @p front and bounded by
 * @p r, with recursion statistics.
 *
 * The front need not be mutually non-comparable: dominated and duplicate
 * points are tolerated and contribute nothing. An empty front measures 0.
 * Child volumes are accumulated with compensated summation.
 *
 * Throws ReferenceBoundViolation when a point exceeds the reference (or
 * has a non-finite coordinate), DimensionMismatch on arity errors.
 */
CalcResult calc_volume(const Front& front, const RefPoint& r,
                       const CalcOptions& options = {});

}  // namespace hvsplit

#endif  // HVSPLIT_SPLITTER_HPP
