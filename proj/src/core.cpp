#include "hvsplit/core.hpp"

#include <cmath>
#include <sstream>

namespace hvsplit {

DominanceRelation compare(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("compare: points have dimensions " +
                                std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    }
    bool a_below = false;  // a < b at some dimension
    bool b_below = false;
    for (int j = 0; j < a.dim(); ++j) {
        if (a[j] < b[j]) a_below = true;
        else if (b[j] < a[j]) b_below = true;
    }
    if (a_below && b_below) return DominanceRelation::NonComparable;
    if (a_below) return DominanceRelation::FirstDominates;
    if (b_below) return DominanceRelation::SecondDominates;
    return DominanceRelation::Equal;
}

namespace {

std::string point_label(int i) { return "points[" + std::to_string(i) + "]"; }

}  // namespace

std::string ValidationReport::summary() const {
    if (violations.empty()) return "valid";
    std::ostringstream out;
    out << violations.size() << " violation(s):";
    for (const auto& v : violations) out << "\n  " << v.detail;
    return out.str();
}

ValidationReport validate(const Front& front, const RefPoint& r,
                          bool require_non_comparable) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, int a, int b, int dim, std::string detail) {
        report.violations.push_back({kind, a, b, dim, std::move(detail)});
    };

    if (r.dim() != front.dimension) {
        add(ViolationKind::DimensionMismatch, -1, -1, -1,
            "reference point has dimension " + std::to_string(r.dim()) +
                ", front declares " + std::to_string(front.dimension));
    }
    for (int j = 0; j < r.dim(); ++j) {
        if (!std::isfinite(r[j])) {
            add(ViolationKind::NonFinite, -1, -1, j,
                "reference coordinate " + std::to_string(j) + " is not finite");
        }
    }

    const int n = front.n();
    for (int i = 0; i < n; ++i) {
        const Point& p = front.points[i];
        if (p.dim() != front.dimension) {
            add(ViolationKind::DimensionMismatch, i, -1, -1,
                point_label(i) + " has dimension " + std::to_string(p.dim()) +
                    ", front declares " + std::to_string(front.dimension));
            continue;  // coordinate-wise checks below assume matching arity
        }
        for (int j = 0; j < p.dim(); ++j) {
            if (!std::isfinite(p[j])) {
                add(ViolationKind::NonFinite, i, -1, j,
                    point_label(i) + " coordinate " + std::to_string(j) +
                        " is not finite");
            } else if (j < r.dim() && p[j] > r[j]) {
                add(ViolationKind::ReferenceBound, i, -1, j,
                    point_label(i) + " exceeds the reference at dimension " +
                        std::to_string(j));
            }
        }
    }

    if (require_non_comparable) {
        for (int i = 0; i < n; ++i) {
            for (int k = i + 1; k < n; ++k) {
                if (front.points[i].dim() != front.points[k].dim()) continue;
                switch (compare(front.points[i], front.points[k])) {
                    case DominanceRelation::FirstDominates:
                        add(ViolationKind::ComparablePair, i, k, -1,
                            point_label(i) + " weakly dominates " + point_label(k));
                        break;
                    case DominanceRelation::SecondDominates:
                        add(ViolationKind::ComparablePair, k, i, -1,
                            point_label(k) + " weakly dominates " + point_label(i));
                        break;
                    case DominanceRelation::Equal:
                        add(ViolationKind::ComparablePair, i, k, -1,
                            point_label(i) + " equals " + point_label(k));
                        break;
                    case DominanceRelation::NonComparable:
                        break;
                }
            }
        }
    }
    return report;
}

Front pareto_filter(const std::vector<Point>& points) {
    if (points.empty()) return Front{};
    const int d = points[0].dim();
    for (const Point& p : points) {
        if (p.dim() != d) {
            throw DimensionMismatch("pareto_filter: mixed dimensions " +
                                    std::to_string(d) + " and " +
                                    std::to_string(p.dim()));
        }
    }

    const int n = static_cast<int>(points.size());
    Front out;
    out.dimension = d;
    for (int i = 0; i < n; ++i) {
        bool keep = true;
        for (int k = 0; k < n && keep; ++k) {
            if (k == i) continue;
            switch (compare(points[k], points[i])) {
                case DominanceRelation::FirstDominates:
                    keep = false;
                    break;
                case DominanceRelation::Equal:
                    if (k < i) keep = false;  // first of an equal group wins
                    break;
                default:
                    break;
            }
        }
        if (keep) out.points.push_back(points[i]);
    }
    return out;
}

double box_volume(const Point& y, const RefPoint& r) {
    if (y.dim() != r.dim()) {
        throw DimensionMismatch("box_volume: point dimension " +
                                std::to_string(y.dim()) + " vs reference " +
                                std::to_string(r.dim()));
    }
    double volume = 1.0;
    for (int j = 0; j < y.dim(); ++j) volume *= r[j] - y[j];
    return volume;
}

}  // namespace hvsplit
