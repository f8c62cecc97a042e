#pragma once

#include <cmath>

namespace landau_delta {

/// Neumaier-compensated accumulator. Long spectral sums (10^6 terms) lose
/// ~1e-10 relative accuracy with naive addition.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double term) noexcept {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term))
            compensation_ += (sum_ - t) + term;
        else
            compensation_ += (term - t) + sum_;
        sum_ = t;
        return *this;
    }
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace landau_delta
