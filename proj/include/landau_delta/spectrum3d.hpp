#pragma once
// Three-dimensional spectral equation g·f(x) = 1 with
//     f(x) = Σ_{n=0}^{N} |n − x|^{−1/2},   g = λ / (8√2 π a).
//
// Roots near a Landau level sit at n − x ~ g², far below the resolution of a
// plain double x ≈ n, so points are carried as (integer anchor, offset).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "params.hpp"
#include "summation.hpp"

namespace landau_delta::spectrum3d {

enum class TailMode { exact, integral_corrected };

struct SpectralFunction {
    long cutoff = 1'000'000;  // N
    long window = 1000;       // W: exact-summation half-width
    TailMode tail_mode = TailMode::integral_corrected;
    double guard = 1e-12;     // minimum distance to a Landau level

    void validate() const {
        detail::require(cutoff >= 1, "cutoff N must be >= 1");
        detail::require(window >= 1, "window W must be >= 1");
        detail::require(guard > 0.0 && guard < 0.5, "singularity guard must lie in (0, 0.5)");
    }
};

/// x = anchor + offset. Distances |k − x| are formed as (k − anchor) − offset,
/// which keeps full relative precision when x is close to the anchor level.
struct SpectralPoint {
    long anchor = 0;
    double offset = 0.0;

    static SpectralPoint nearest(double x) {
        const double k = std::round(x);
        return {static_cast<long>(k), x - k};
    }
    double value() const { return static_cast<double>(anchor) + offset; }
};

struct Evaluation {
    double value = 0.0;
    double error_bound = 0.0;
};

namespace detail {

inline double distance(long k, SpectralPoint p) {
    return std::abs(static_cast<double>(k - p.anchor) - p.offset);
}

// Σ_{j=0}^{m} (near + j)^{-1/2}, m = far − near, by Euler–Maclaurin through the
// first derivative correction. All even derivatives of d^{-1/2} are positive, so
// the remainder is bounded by the first omitted (B4) term.
inline Evaluation euler_maclaurin_tail(double near, double far, double count_minus_one) {
    const double s_near = std::sqrt(near), s_far = std::sqrt(far);
    const double integral = 2.0 * count_minus_one / (s_near + s_far);
    const double endpoints = 0.5 * (1.0 / s_near + 1.0 / s_far);
    auto first = [](double d) { return -0.5 / (d * std::sqrt(d)); };
    auto third = [](double d) { return -1.875 / (d * d * d * std::sqrt(d)); };
    const double correction = (first(far) - first(near)) / 12.0;
    return {integral + endpoints + correction, std::abs(third(far) - third(near)) / 720.0};
}

}  // namespace detail

/// Throws SingularityError when p lies within the guard of a level 0..N.
inline void check_singularity(const SpectralFunction& sf, SpectralPoint p) {
    const double shift = std::round(p.offset);
    const long k = p.anchor + static_cast<long>(shift);
    if (k < 0 || k > sf.cutoff) return;
    if (std::abs(p.offset - shift) < sf.guard)
        throw SingularityError("spectral function evaluated within guard of level " +
                                   std::to_string(k),
                               p.value(), k);
}

inline Evaluation evaluate(const SpectralFunction& sf, SpectralPoint p) {
    sf.validate();
    check_singularity(sf, p);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const long n_max = sf.cutoff;

    if (sf.tail_mode == TailMode::exact) {
        CompensatedSum sum;
        for (long k = 0; k <= n_max; ++k) sum += 1.0 / std::sqrt(detail::distance(k, p));
        const double v = sum.value();
        return {v, 4.0 * eps * v};
    }

    const double w = static_cast<double>(sf.window);
    // exact set {k : |k − x| <= W} ∩ [0, N]
    const double lo_rel = std::ceil(p.offset - w);
    const double hi_rel = std::floor(p.offset + w);
    const double lo_abs = std::max(0.0, static_cast<double>(p.anchor) + lo_rel);
    const double hi_abs = std::min(static_cast<double>(n_max), static_cast<double>(p.anchor) + hi_rel);

    CompensatedSum sum;
    double bound = 0.0;
    long k_lo = static_cast<long>(lo_abs);
    long k_hi = static_cast<long>(hi_abs);
    if (k_lo <= k_hi) {
        for (long k = k_lo; k <= k_hi; ++k) sum += 1.0 / std::sqrt(detail::distance(k, p));
    } else if (hi_abs < 0.0) {
        k_hi = -1;  // x far below the spectrum: everything is right tail
        k_lo = 0;
    } else {
        k_lo = n_max + 1;  // x far above: everything is left tail
        k_hi = n_max;
    }

    if (k_hi < n_max) {  // right tail k_hi+1 .. N
        const long a = std::max(k_hi + 1, 0L);
        const auto t = detail::euler_maclaurin_tail(detail::distance(a, p), detail::distance(n_max, p),
                                                    static_cast<double>(n_max - a));
        sum += t.value;
        bound += t.error_bound;
    }
    if (k_lo > 0) {  // left tail 0 .. k_lo−1, nearest term is k_lo−1
        const long b = std::min(k_lo - 1, n_max);
        const auto t = detail::euler_maclaurin_tail(detail::distance(b, p), detail::distance(0, p),
                                                    static_cast<double>(b));
        sum += t.value;
        bound += t.error_bound;
    }
    const double v = sum.value();
    return {v, bound + 16.0 * eps * v};
}

inline Evaluation f3_with_bound(double x, const SpectralFunction& sf) {
    return evaluate(sf, SpectralPoint::nearest(x));
}

inline double f3(double x, const SpectralFunction& sf) { return f3_with_bound(x, sf).value; }

// ---------------------------------------------------------------------------
// Root solving

struct SolverOptions {
    double x_tolerance = 1e-13;
    double residual_tolerance = 1e-12;
    int max_iterations = 2000;
};

struct Root {
    int n = 0;            // level index; 0 labels the ground state
    double x = 0.0;       // E / ħω
    double offset = 0.0;  // x − anchor level (δ_n for n >= 1, x0 itself for the ground state)
    double residual = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

struct SpectrumResult {
    Root ground;
    std::vector<Root> levels;  // n = 1..n_max, strictly increasing
};

namespace detail {

struct BisectionOutcome {
    double offset;
    double residual;
};

// F(offset) = g·f(anchor + offset) − 1 is increasing on [lo, hi] with F(lo) < 0 < F(hi).
template <class Fn>
BisectionOutcome bisect_increasing(Fn&& residual, double lo, double hi, const SolverOptions& opt) {
    double best = lo, best_res = residual(lo);
    for (int it = 0; it < opt.max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double r = residual(mid);
        if (std::abs(r) < std::abs(best_res)) {
            best = mid;
            best_res = r;
        }
        if (r == 0.0) break;
        (r < 0.0 ? lo : hi) = mid;
        if (hi - lo <= opt.x_tolerance && std::abs(best_res) <= opt.residual_tolerance) break;
    }
    const double r_hi = residual(hi);
    if (std::abs(r_hi) < std::abs(best_res)) return {hi, std::abs(r_hi)};
    return {best, std::abs(best_res)};
}

inline double residual_at(double g, const SpectralFunction& sf, SpectralPoint p) {
    return g * evaluate(sf, p).value - 1.0;
}

}  // namespace detail

/// Unique negative root. The lower bracket expands geometrically (−1, −2, −4, ...)
/// until g·f < 1, which terminates because f → 0 as x → −∞.
inline Root solve_ground(double g, const SpectralFunction& sf, const SolverOptions& opt = {}) {
    landau_delta::detail::require(g > 0.0 && std::isfinite(g), "coupling g must be positive");
    sf.validate();
    auto res = [&](double off) { return detail::residual_at(g, sf, {0, off}); };
    const double hi = -sf.guard;
    const double r_hi = res(hi);
    double lo = -1.0;
    double r_lo = res(lo);
    while (r_lo >= 0.0) {
        lo *= 2.0;
        if (!std::isfinite(lo) || lo < -1e300)
            throw BracketingError("ground-state lower bracket did not converge", lo, hi, r_lo, r_hi);
        r_lo = res(lo);
    }
    if (r_hi <= 0.0)
        throw BracketingError("ground root lies inside the singularity guard (g too small)", lo, hi,
                              r_lo, r_hi);
    const auto out = detail::bisect_increasing(res, lo, hi, opt);
    return {0, out.offset, out.offset, out.residual, lo, hi};
}

/// Root in (n−1, n) adjoining level n from below (δ_n < 0). f is convex on each
/// unit interval; the bracket runs from its minimiser to n − guard.
inline Root solve_level(int n, double g, const SpectralFunction& sf, const SolverOptions& opt = {}) {
    landau_delta::detail::require(g > 0.0 && std::isfinite(g), "coupling g must be positive");
    landau_delta::detail::require(n >= 1 && n <= sf.cutoff, "level index must lie in 1..N");
    sf.validate();

    // golden-section search for the minimiser, offsets relative to n − 1
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto f_left = [&](double t) { return evaluate(sf, {n - 1, t}).value; };
    double a = sf.guard, b = 1.0 - sf.guard;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f_left(c), fd = f_left(d);
    while (b - a > 1e-10) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f_left(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f_left(d);
        }
    }
    const double lo = 0.5 * (a + b) - 1.0;  // offset relative to n
    const double hi = -sf.guard;
    auto res = [&](double off) { return detail::residual_at(g, sf, {n, off}); };
    const double r_lo = res(lo), r_hi = res(hi);
    if (!(r_lo < 0.0 && r_hi > 0.0))
        throw BracketingError("no sign change of g*f(x)-1 below level " + std::to_string(n) +
                                  " (minimum of g*f exceeds 1)",
                              n + lo, n + hi, r_lo, r_hi);
    const auto out = detail::bisect_increasing(res, lo, hi, opt);
    return {n, static_cast<double>(n) + out.offset, out.offset, out.residual, n + lo, n + hi};
}

inline SpectrumResult solve_spectrum(double g, const SpectralFunction& sf, int n_max,
                                     const SolverOptions& opt = {}) {
    landau_delta::detail::require(n_max >= 0 && n_max <= sf.cutoff, "n_max must lie in 0..N");
    SpectrumResult out;
    out.ground = solve_ground(g, sf, opt);
    out.levels.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.levels.push_back(solve_level(n, g, sf, opt));
    return out;
}

// ---------------------------------------------------------------------------
// Perturbative estimates and auxiliary sums

/// Single-singular-term estimate of the level shift, reduced units.
inline double perturbative_shift(double g) { return -g * g; }

/// The published coefficient, −λ²mω²/(32π²) = −4g² in reduced units.
inline double published_perturbative_shift(double g) { return -4.0 * g * g; }

/// R0 = Σ_{n=1}^{N} n^{−1/2}: the non-singular remainder of f at x → 0⁻.
inline double regular_sum(long cutoff) {
    landau_delta::detail::require(cutoff >= 0, "cutoff must be non-negative");
    CompensatedSum s;
    for (long n = 1; n <= cutoff; ++n) s += 1.0 / std::sqrt(static_cast<double>(n));
    return s.value();
}

/// Ground shift with the regular remainder absorbed into the coupling:
/// 1/√b = 1/g − R0 + O(b) gives b·(1 − g·R0)² → g².
inline double tail_subtracted_shift(double x0, double g, long cutoff) {
    const double r = 1.0 - g * regular_sum(cutoff);
    return x0 * r * r;
}

/// Smallest integer N with N^{3/2} >= 12√2π/(λ/a) + (−x0)^{3/2}.
inline long cutoff_from_coupling(double lambda_over_a, double x0) {
    landau_delta::detail::require(lambda_over_a > 0.0, "lambda/a must be positive");
    landau_delta::detail::require(x0 <= 0.0, "ground energy x0 must be <= 0");
    const double n32 = 12.0 * std::numbers::sqrt2 * std::numbers::pi / lambda_over_a +
                       std::pow(-x0, 1.5);
    const double n = std::pow(n32, 2.0 / 3.0);
    // absorb rounding so exact powers of unity do not step up
    const double c = std::ceil(n * (1.0 - 8.0 * std::numeric_limits<double>::epsilon()));
    return std::max(1L, static_cast<long>(c));
}

/// Σ_{n=0}^{N} (n + b)^{−3/2}: the normalization sum after the p3 integral.
inline double normalization_sum(double b, long cutoff) {
    landau_delta::detail::require(b > 0.0, "b must be positive");
    landau_delta::detail::require(cutoff >= 0, "cutoff must be non-negative");
    CompensatedSum s;
    for (long n = cutoff; n >= 0; --n) {
        const double t = static_cast<double>(n) + b;
        s += 1.0 / (t * std::sqrt(t));
    }
    return s.value();
}

}  // namespace landau_delta::spectrum3d
