/**
 * @file frontgen.hpp
 * @brief Deterministic generators of valid non-comparable fronts for
 *        property tests and benchmarks.
 */

#ifndef HVSPLIT_FRONTGEN_HPP
#define HVSPLIT_FRONTGEN_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hvsplit/core.hpp"

namespace hvsplit {

/// A generation request could not be satisfied (bad parameters, or the
/// family cannot reach the requested size).
struct GenError : Error {
    using Error::Error;
};

enum class Family {
    kSimplex,              ///< coordinates >= 0 summing to 1; non-comparable by the sum argument
    kSphere,               ///< positive orthant of the unit sphere; same argument with the norm
    kUniformFiltered,      ///< uniform in the unit box, Pareto-filtered until n survive
    kPermutationSymmetric, ///< n = d; point i is 0 at dimension i, 1 elsewhere
    kTiedCoordinates,      ///< simplex points on a coarse grid, filtered; forces equal coordinates
};

struct GenSpec {
    int n = 1;
    int d = 2;
    Family family = Family::kSimplex;
    std::uint64_t seed = 0;
    /// Additive reference margin: ref = componentwise max + margin.
    double ref_margin = 0.1;
};

struct GeneratedFront {
    Front front;
    RefPoint ref;
};

/**
 * Generates a front of exactly n mutually non-comparable points plus its
 * reference point. Bit-for-bit deterministic per spec. The simplex and
 * sphere families reject candidates sharing any exact coordinate value
 * with an already accepted point, so their columns carry no ties.
 *
 * Throws GenError on invalid parameters (n < 1, d < 2, negative margin,
 * permutation-symmetric with n != d) and when the resampling budget of a
 * filtered family is exhausted — uniform-filtered at d = 2 saturates near
 * ln(candidates) survivors, so large n there is not reachable.
 */
GeneratedFront generate(const GenSpec& spec);

/// Stable CLI-facing family names ("simplex", "uniform-filtered", ...).
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

}  // namespace hvsplit

#endif  // HVSPLIT_FRONTGEN_HPP
