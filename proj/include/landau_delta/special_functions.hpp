#pragma once
// Digamma and Airy functions.

#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"

namespace landau_delta::special {

/// ψ(x) for x > 0: recurrence ψ(x) = ψ(x+1) − 1/x up to x >= 10, then the
/// asymptotic series ln x − 1/(2x) − Σ B_{2k}/(2k x^{2k}).
inline double digamma(double x) {
    detail::require(x > 0.0 && std::isfinite(x), "digamma argument must be positive and finite");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    // B2/2, B4/4, ..., B14/14
    const double series =
        r * (1.0 / 12 -
             r * (1.0 / 120 -
                  r * (1.0 / 252 -
                       r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r * (1.0 / 12)))))));
    return acc + std::log(x) - 0.5 / x - series;
}

struct AiryValues {
    double ai = 0.0;
    double bi = 0.0;
    double ai_prime = 0.0;
    double bi_prime = 0.0;
};

namespace detail {

inline constexpr double ai0 = 0.355028053887817239260;   // Ai(0)
inline constexpr double aip0 = 0.258819403792806798405;  // −Ai'(0)

inline AiryValues airy_maclaurin(double z) {
    // Ai = c1 f − c2 g, Bi = √3 (c1 f + c2 g)
    const double z3 = z * z * z;
    double f = 1.0, fp = 0.0, g = z, gp = 1.0;
    double a = 1.0, b = z;  // current terms of f and g
    const double z2 = z * z;
    for (int k = 1; k < 60; ++k) {
        // derivative terms from the previous power: d/dz z^{3k} = z²·z^{3k−3}·3k
        fp += a * z2 / (3.0 * k - 1.0);
        gp += b * z2 / (3.0 * k);
        a *= z3 / ((3.0 * k - 1.0) * (3.0 * k));
        b *= z3 / ((3.0 * k) * (3.0 * k + 1.0));
        f += a;
        g += b;
        if (std::abs(a) < 1e-18 && std::abs(b) < 1e-18) break;
    }
    const double s3 = std::sqrt(3.0);
    return {ai0 * f - aip0 * g, s3 * (ai0 * f + aip0 * g), ai0 * fp - aip0 * gp,
            s3 * (ai0 * fp + aip0 * gp)};
}

inline AiryValues airy_bessel_positive(double z) {
    using std::numbers::pi;
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double k13 = std::cyl_bessel_k(1.0 / 3.0, zeta), k23 = std::cyl_bessel_k(2.0 / 3.0, zeta);
    const double i13 = std::cyl_bessel_i(1.0 / 3.0, zeta), i23 = std::cyl_bessel_i(2.0 / 3.0, zeta);
    const double s3 = std::sqrt(3.0);
    // I_{−ν} = I_ν + (2/π) sin(νπ) K_ν
    const double im13 = i13 + 2.0 / pi * std::sin(pi / 3.0) * k13;
    const double im23 = i23 + 2.0 / pi * std::sin(2.0 * pi / 3.0) * k23;
    return {std::sqrt(z / 3.0) / pi * k13, std::sqrt(z / 3.0) * (i13 + im13), -z / (pi * s3) * k23,
            z / s3 * (i23 + im23)};
}

inline AiryValues airy_bessel_negative(double x) {  // argument is −x, x > 0
    using std::numbers::pi;
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const double j13 = std::cyl_bessel_j(1.0 / 3.0, zeta), y13 = std::cyl_neumann(1.0 / 3.0, zeta);
    const double j23 = std::cyl_bessel_j(2.0 / 3.0, zeta), y23 = std::cyl_neumann(2.0 / 3.0, zeta);
    // J_{−ν} = cos(νπ) J_ν − sin(νπ) Y_ν
    const double jm13 = std::cos(pi / 3.0) * j13 - std::sin(pi / 3.0) * y13;
    const double jm23 = std::cos(2.0 * pi / 3.0) * j23 - std::sin(2.0 * pi / 3.0) * y23;
    const double s3 = std::sqrt(3.0);
    return {std::sqrt(x) / 3.0 * (j13 + jm13), std::sqrt(x / 3.0) * (jm13 - j13),
            x / 3.0 * (j23 - jm23), x / s3 * (jm23 + j23)};
}

struct AsymptoticSums {
    double plus, alt, plus_prime, alt_prime;
};

// Σ u_k ζ^{-k}, Σ (−1)^k u_k ζ^{-k} and the v_k analogues, optimally truncated.
inline AsymptoticSums airy_asymptotic_sums(double zeta) {
    double u = 1.0, p = 1.0;
    AsymptoticSums s{1.0, 1.0, 1.0, 1.0};
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        p /= zeta;
        const double term = u * p;
        const double vterm = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * term;
        if (std::abs(term) > last || std::abs(term) < 1e-18) break;
        last = std::abs(term);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        s.plus += term;
        s.alt += sign * term;
        s.plus_prime += vterm;
        s.alt_prime += sign * vterm;
    }
    return s;
}

}  // namespace detail

inline constexpr double airy_series_limit = 1.0;
inline constexpr double airy_asymptotic_limit = 8.0;

/// Ai, Bi and derivatives: Maclaurin series for |z| <= 1, Bessel-function
/// representations for 1 < |z| < 8, and the asymptotic expansion for z >= 8.
inline AiryValues airy(double z) {
    if (std::abs(z) <= airy_series_limit) return detail::airy_maclaurin(z);
    if (z < 0.0) return detail::airy_bessel_negative(-z);
    if (z < airy_asymptotic_limit) return detail::airy_bessel_positive(z);
    const double sz = std::sqrt(z);
    const double zeta = 2.0 / 3.0 * z * sz;
    const double q = std::sqrt(sz);  // z^{1/4}
    const double rpi = std::sqrt(std::numbers::pi);
    const auto s = detail::airy_asymptotic_sums(zeta);
    const double grow = std::exp(zeta), decay = std::exp(-zeta);
    return {decay * s.alt / (2.0 * rpi * q), grow * s.plus / (rpi * q),
            -q * decay * s.alt_prime / (2.0 * rpi), q * grow * s.plus_prime / rpi};
}

}  // namespace landau_delta::special
