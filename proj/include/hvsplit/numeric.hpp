/**
 * @file numeric.hpp
 * @brief Compensated summation and the relative tolerance used by every
 *        volume equality check in the project.
 */

#ifndef HVSPLIT_NUMERIC_HPP
#define HVSPLIT_NUMERIC_HPP

#include <cmath>

namespace hvsplit {

/// Relative tolerance for volume comparisons, applied on max(1, |reference|).
inline constexpr double kRelTol = 1e-9;

/// |value - reference| <= tol * max(1, |reference|).
inline bool within_rel_tol(double value, double reference, double tol = kRelTol) {
    return std::abs(value - reference) <= tol * std::max(1.0, std::abs(reference));
}

/// Neumaier variant of Kahan summation. Deep recursions add boxes of
/// wildly differing magnitude; the running compensation keeps the error
/// independent of the addend order.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    [[nodiscard]] double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace hvsplit

#endif  // HVSPLIT_NUMERIC_HPP
