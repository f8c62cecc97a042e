#pragma once
// One-dimensional quadrature: composite trapezoid with panel doubling, and
// adaptive Simpson with Richardson extrapolation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <type_traits>
#include <utility>

#include "errors.hpp"

namespace landau_delta {

enum class QuadratureRule { trapezoid, adaptive_simpson };

struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::adaptive_simpson;
    double abs_tol = 1e-10;
    int max_depth = 40;

    void validate() const {
        detail::require(abs_tol > 0.0, "quadrature abs_tol must be positive");
        detail::require(max_depth >= 1, "quadrature max_depth must be >= 1");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int depth = 0;  // deepest level used
    bool converged = false;
};

namespace detail {

template <class F>
struct SimpsonState {
    F& f;
    int max_depth;
    double error = 0.0;
    int deepest = 0;
    bool ok = true;

    double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = f(lm), frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth > deepest) deepest = depth;
        if (depth >= max_depth || std::abs(delta) <= 15.0 * tol) {
            if (std::abs(delta) > 15.0 * tol) ok = false;
            error += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace detail

template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, const QuadratureSpec& spec = {}) {
    spec.validate();
    if (spec.rule == QuadratureRule::adaptive_simpson) {
        // seed with four panels so symmetric integrands cannot fool the first test
        QuadratureResult out;
        const int seeds = 4;
        const double width = (hi - lo) / seeds;
        out.converged = true;
        for (int s = 0; s < seeds; ++s) {
            const double a = lo + s * width, b = (s + 1 == seeds) ? hi : a + width;
            const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
            const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
            detail::SimpsonState<std::remove_reference_t<F>> st{f, spec.max_depth};
            out.value += st.recurse(a, b, fa, fm, fb, whole, spec.abs_tol / seeds, 1);
            out.error_estimate += st.error;
            out.depth = std::max(out.depth, st.deepest);
            out.converged = out.converged && st.ok;
        }
        return out;
    }

    // trapezoid, doubling the panel count each level
    double h = hi - lo;
    double t = 0.5 * h * (f(lo) + f(hi));
    QuadratureResult out{t, std::abs(t), 0, false};
    long panels = 1;
    for (int depth = 1; depth <= spec.max_depth; ++depth) {
        double mid_sum = 0.0;
        for (long i = 0; i < panels; ++i) mid_sum += f(lo + (i + 0.5) * h);
        const double next = 0.5 * t + 0.5 * h * mid_sum;
        panels *= 2;
        h *= 0.5;
        out = {next, std::abs(next - t) / 3.0, depth, false};
        t = next;
        if (depth >= 3 && out.error_estimate <= spec.abs_tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

/// As integrate(), but throws QuadratureError when the tolerance is not met.
template <class F>
QuadratureResult integrate_checked(F&& f, double lo, double hi, const QuadratureSpec& spec = {}) {
    auto r = integrate(std::forward<F>(f), lo, hi, spec);
    if (!r.converged)
    {
        char buf[96];
        std::snprintf(buf, sizeof buf, "quadrature did not reach abs_tol %g within depth %d", spec.abs_tol,
                      spec.max_depth);
        throw QuadratureError(buf);
    }
    return r;
}

template <class F>
std::complex<double> integrate_complex(F&& f, double lo, double hi, const QuadratureSpec& spec,
                                       double* error = nullptr) {
    auto re = integrate_checked([&](double t) { return std::real(f(t)); }, lo, hi, spec);
    auto im = integrate_checked([&](double t) { return std::imag(f(t)); }, lo, hi, spec);
    if (error) *error = re.error_estimate + im.error_estimate;
    return {re.value, im.value};
}

}  // namespace landau_delta
