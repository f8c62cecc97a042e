#pragma once
// Two-dimensional spectral equation 1 = (λ/4π) Σ_{n=0}^{N} 1/(n + b), b = −E/ħω.

#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "special_functions.hpp"
#include "summation.hpp"

namespace landau_delta::spectrum2d {

struct TwoDSetup {
    double lam2 = 1.0;  // dimensionless coupling
    long cutoff = 1'000'000;

    void validate() const {
        detail::require(lam2 > 0.0 && std::isfinite(lam2), "2D coupling must be positive and finite");
        detail::require(cutoff >= 1, "cutoff N must be >= 1");
    }
};

/// Σ_{n=0}^{N} 1/(n + b) = ψ(N + 1 + b) − ψ(b).
inline double f2(double b, long cutoff) {
    detail::require(b > 0.0 && std::isfinite(b), "b must be positive");
    detail::require(cutoff >= 0, "cutoff must be non-negative");
    return special::digamma(static_cast<double>(cutoff) + 1.0 + b) - special::digamma(b);
}

/// Term-by-term reference for f2.
inline double f2_direct(double b, long cutoff) {
    detail::require(b > 0.0, "b must be positive");
    CompensatedSum s;
    for (long n = cutoff; n >= 0; --n) s += 1.0 / (static_cast<double>(n) + b);
    return s.value();
}

/// b* > 0 with (λ/4π)·f2(b*, N) = 1. f2 decreases strictly from +∞ to 0, so the
/// root is unique; bisection runs in log b for uniform relative accuracy.
inline double solve_ground_2d(const TwoDSetup& setup) {
    setup.validate();
    const double scale = setup.lam2 / (4.0 * std::numbers::pi);
    auto residual = [&](double log_b) { return scale * f2(std::exp(log_b), setup.cutoff) - 1.0; };

    double hi = 0.0;  // log b
    while (residual(hi) > 0.0) {
        hi += 2.0;
        if (hi > 690.0) throw InvalidParameter("2D coupling too large: root beyond double range");
    }
    double lo = hi - 2.0;
    while (residual(lo) < 0.0) {
        lo -= 2.0;
        if (lo < -700.0) throw InvalidParameter("2D coupling too small: root below double range");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (residual(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

/// Large-N estimate b ≈ N·exp(−4π/λ) from replacing the sum by ln(N/b).
inline double ground_2d_asymptotic(const TwoDSetup& setup) {
    setup.validate();
    return static_cast<double>(setup.cutoff) * std::exp(-4.0 * std::numbers::pi / setup.lam2);
}

}  // namespace landau_delta::spectrum2d
