/**
 * @file helpers.hpp
 * @brief Shared fixtures for the test suites: compact front builders, the
 *        3-D worked-example front, and a deterministic mixed-family
 *        rotation for randomized property loops.
 */

#ifndef HVSPLIT_TESTS_HELPERS_HPP
#define HVSPLIT_TESTS_HELPERS_HPP

#include <vector>

#include "hvsplit/core.hpp"
#include "hvsplit/frontgen.hpp"
#include "hvsplit/rng.hpp"

namespace test_helpers {

inline hvsplit::Front make_front(const std::vector<std::vector<double>>& rows) {
    hvsplit::Front front;
    front.dimension = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (const auto& row : rows) {
        front.points.emplace_back(std::vector<double>(row));
    }
    return front;
}

inline hvsplit::RefPoint make_ref(std::vector<double> coords) {
    return hvsplit::RefPoint{std::move(coords)};
}

/// The five-point 3-D example used throughout: volume 76.5 with
/// reference (6,6,6), pinned by an exact rational inclusion-exclusion
/// cross-checked against exact grid-cell decomposition.
inline hvsplit::Front worked_example_front() {
    return make_front({{1, 2, 3}, {4, 3, 2}, {5, 1, 4}, {3, 5, 1}, {2, 2, 2.5}});
}

inline constexpr double kWorkedExampleVolume = 76.5;

/// Rotates through the families that can generate any (n, d) cheaply;
/// uniform-filtered joins only at d >= 3 where enough survivors exist.
inline hvsplit::Family mixed_family(int index, int d) {
    using hvsplit::Family;
    if (d >= 3) {
        constexpr Family kChoices[] = {Family::kSimplex, Family::kSphere,
                                       Family::kTiedCoordinates,
                                       Family::kUniformFiltered};
        return kChoices[index % 4];
    }
    constexpr Family kChoices[] = {Family::kSimplex, Family::kSphere,
                                   Family::kTiedCoordinates};
    return kChoices[index % 3];
}

/// Deterministic per-instance seed for randomized loops.
inline std::uint64_t instance_seed(std::uint64_t suite, std::uint64_t index) {
    return hvsplit::SplitMix64::at(suite, index);
}

}  // namespace test_helpers

#endif  // HVSPLIT_TESTS_HELPERS_HPP
