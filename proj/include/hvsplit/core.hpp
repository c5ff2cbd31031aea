/**
 * @file core.hpp
 * @brief Domain types and basic operations for hypervolume computation:
 *        points, fronts, Pareto dominance, input validation, and the
 *        volume of a single axis-aligned box.
 *
 * Minimization convention throughout: smaller objective values are better.
 * Maximization inputs must be negated by the caller.
 */

#ifndef HVSPLIT_CORE_HPP
#define HVSPLIT_CORE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvsplit {

/// Base class for all structured errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands (points, or point and reference) have different arity.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A point exceeds the reference point at some dimension.
struct ReferenceBoundViolation : Error {
    using Error::Error;
};

/// One objective vector. Coordinates are unitless objective values.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    [[nodiscard]] int dim() const { return static_cast<int>(coords.size()); }
    double operator[](int j) const { return coords[static_cast<std::size_t>(j)]; }
    double& operator[](int j) { return coords[static_cast<std::size_t>(j)]; }

    bool operator==(const Point& other) const { return coords == other.coords; }
};

/// Upper bounding corner of the measured region: r_j >= y_j for every
/// front point y and dimension j.
struct RefPoint {
    std::vector<double> coords;

    RefPoint() = default;
    RefPoint(std::initializer_list<double> c) : coords(c) {}
    explicit RefPoint(std::vector<double> c) : coords(std::move(c)) {}

    [[nodiscard]] int dim() const { return static_cast<int>(coords.size()); }
    double operator[](int j) const { return coords[static_cast<std::size_t>(j)]; }
    double& operator[](int j) { return coords[static_cast<std::size_t>(j)]; }

    bool operator==(const RefPoint& other) const { return coords == other.coords; }
};

/// An ordered list of points sharing one dimension. Order is significant:
/// tie-breaking in the splitter depends on it.
struct Front {
    int dimension = 0;
    std::vector<Point> points;

    Front() = default;
    Front(int dim, std::vector<Point> pts) : dimension(dim), points(std::move(pts)) {}

    [[nodiscard]] int n() const { return static_cast<int>(points.size()); }
};

/// Outcome of comparing two points under weak Pareto dominance.
enum class DominanceRelation {
    FirstDominates,   ///< a <= b everywhere, a < b somewhere (covers strict)
    SecondDominates,  ///< mirror case
    Equal,            ///< all coordinates identical
    NonComparable,    ///< each point is strictly smaller somewhere
};

/**
 * Compares two points of equal dimension under weak Pareto dominance
 * (minimization). Exactly one relation holds per pair.
 *
 * Throws DimensionMismatch when the arities differ.
 */
DominanceRelation compare(const Point& a, const Point& b);

/// What a validation finding is about.
enum class ViolationKind {
    NonFinite,         ///< NaN or infinity in a coordinate
    DimensionMismatch, ///< point arity differs from the front's dimension
    ReferenceBound,    ///< r_j < y_ij for some point i, dimension j
    ComparablePair,    ///< one point weakly dominates (or equals) another
};

/// One validation finding. Indices are zero-based; fields that do not
/// apply to the kind are -1.
struct Violation {
    ViolationKind kind;
    int point_a = -1;
    int point_b = -1;
    int dim = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::string summary() const;
};

/**
 * Checks a front against its reference point and reports every violation
 * found: non-finite coordinates, arity mismatches, reference-bound
 * breaches, and — when @p require_non_comparable is set — every pair in
 * which one point weakly dominates or equals another.
 *
 * Report-style: never throws; callers decide whether to abort.
 */
ValidationReport validate(const Front& front, const RefPoint& r,
                          bool require_non_comparable = false);

/**
 * Returns the maximal subset of @p points in which no point weakly
 * dominates another, preserving first-occurrence order. Of a group of
 * exactly equal points only the first is kept.
 */
Front pareto_filter(const std::vector<Point>& points);

/**
 * Volume of the box [y, r]: the product of (r_j - y_j) over all
 * dimensions. Zero when any coordinate of y touches the reference.
 * Assumes y <= r componentwise (validated upstream).
 */
double box_volume(const Point& y, const RefPoint& r);

}  // namespace hvsplit

#endif  // HVSPLIT_CORE_HPP
