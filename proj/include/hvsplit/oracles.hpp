/**
 * @file oracles.hpp
 * @brief Independent hypervolume computations used as ground truth in
 *        differential tests: exact inclusion-exclusion over box subsets,
 *        a 2-D sweep, and a seeded Monte Carlo estimator.
 *
 * These stay structurally dissimilar from the splitter on purpose. The
 * inclusion-exclusion and Monte Carlo kernels are data-parallel and run
 * under OpenMP; each keeps a serial reference implementation used by the
 * tests and the kernel benchmark. Serial and parallel Monte Carlo agree
 * bit for bit (the hit count is an integer sum over a random-access
 * stream); the inclusion-exclusion pair agrees within summation error.
 */

#ifndef HVSPLIT_ORACLES_HPP
#define HVSPLIT_ORACLES_HPP

#include <cstdint>
#include <optional>

#include "hvsplit/core.hpp"

namespace hvsplit {

/// Inclusion-exclusion enumerates 2^n - 1 subsets; refuse above this
/// point count unless the caller raises the cap explicitly.
inline constexpr int kDefaultSubsetCap = 20;

/// The subset-enumeration oracle was asked for more points than its cap.
struct SubsetCapExceeded : Error {
    SubsetCapExceeded(int n, int cap)
        : Error("inclusion-exclusion oracle: " + std::to_string(n) +
                " points exceed the cap of " + std::to_string(cap)),
          n_points(n),
          cap_points(cap) {}
    int n_points;
    int cap_points;
};

/**
 * Exact hypervolume by inclusion-exclusion: the alternating-sign sum over
 * all nonempty subsets S of prod_j (r_j - max_{i in S} y_ij). Subsets are
 * enumerated with a plain binary counter, no pruning. OpenMP splits the
 * counter range; partial sums are compensated.
 *
 * Throws SubsetCapExceeded when n > max_points.
 */
double hv_inclusion_exclusion(const Front& front, const RefPoint& r,
                              int max_points = kDefaultSubsetCap);

/// Serial reference for hv_inclusion_exclusion.
double hv_inclusion_exclusion_serial(const Front& front, const RefPoint& r,
                                     int max_points = kDefaultSubsetCap);

/**
 * Exact 2-D hypervolume by a left-to-right sweep: Pareto-filter, sort by
 * the first coordinate ascending, and sum the strips
 * (x_{i+1} - x_i) * (r_2 - y_i) with x_{n+1} = r_1.
 *
 * Throws DimensionMismatch when the front is not 2-dimensional.
 */
double hv_sweep_2d(const Front& front, const RefPoint& r);

/// Monte Carlo hypervolume estimate with a binomial error bar.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    bool operator==(const McEstimate&) const = default;
};

/**
 * Uniform sampling over the box [lower, r]; the estimate is the box
 * measure times the fraction of samples weakly dominated by some front
 * point. Coordinate j of sample s is output (s*d + j) of the SplitMix64
 * stream for @p seed, so a fixed seed reproduces exactly, regardless of
 * thread count.
 *
 * @p lower defaults to the componentwise minimum of the front and must
 * not exceed any front point. A zero-measure sampling box yields mean 0
 * with std_error 0.
 */
McEstimate hv_monte_carlo(const Front& front, const RefPoint& r,
                          std::uint64_t samples, std::uint64_t seed,
                          const std::optional<Point>& lower = std::nullopt);

/// Serial reference for hv_monte_carlo; bit-identical results.
McEstimate hv_monte_carlo_serial(const Front& front, const RefPoint& r,
                                 std::uint64_t samples, std::uint64_t seed,
                                 const std::optional<Point>& lower = std::nullopt);

}  // namespace hvsplit

#endif  // HVSPLIT_ORACLES_HPP
