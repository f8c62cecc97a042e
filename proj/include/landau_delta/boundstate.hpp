#pragma once
// Ground-state wave function, probability current and its vortex structure.
//
// Units: ħ = m = 1 and the particle charge is negative (an electron), so
// eB/c = −mω = −1/a². Lengths are free; the magnetic length a sets ω = 1/a².

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"

namespace landau_delta::boundstate {

struct Position {
    double x = 0.0, y = 0.0, z = 0.0;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

struct BoundState {
    double a = 1.0;     // magnetic length
    double l = 1.0;     // longitudinal localisation ħ/√(2m|E0|)
    double e0 = -0.5;   // ground energy
    double norm = 0.0;  // (2π a² l)^{−1/2}

    static BoundState from_lengths(double a, double l) {
        detail::require(a > 0.0 && std::isfinite(a), "magnetic length a must be positive");
        detail::require(l > 0.0 && std::isfinite(l), "localisation length l must be positive");
        return {a, l, -0.5 / (l * l), 1.0 / std::sqrt(2.0 * std::numbers::pi * a * a * l)};
    }

    /// From the ground root x0 = E0/ħω < 0 in reduced units (a = 1).
    static BoundState from_reduced_energy(double x0) {
        detail::require(x0 < 0.0, "ground energy must be negative");
        return from_lengths(1.0, 1.0 / std::sqrt(-2.0 * x0));
    }
};

enum class Gauge { landau, symmetric };

/// z-decay of the current: `derived` is exp(−2|z|/l) as implied by |Ψ0|²;
/// `printed` is the exp(−2√2|z|/l) form kept for comparison.
enum class DecayConvention { derived, printed };

struct VectorSample {
    Position position;
    Vec3 current;
};

inline std::complex<double> psi0(const Position& p, const BoundState& bs) {
    const std::complex<double> exponent{-(p.x * p.x + p.y * p.y) / (4.0 * bs.a * bs.a),
                                        p.x * p.y / (2.0 * bs.a * bs.a)};
    return bs.norm * std::exp(exponent) * std::exp(-std::abs(p.z) / bs.l);
}

inline double density(const Position& p, const BoundState& bs) { return std::norm(psi0(p, bs)); }

/// Longitudinal envelope F(z) of the current and vortex amplitude.
inline double envelope(double z, const BoundState& bs, DecayConvention c = DecayConvention::derived) {
    const double k = (c == DecayConvention::derived) ? 2.0 : 2.0 * std::numbers::sqrt2;
    return std::exp(-k * std::abs(z) / bs.l);
}

/// J0 with J = J0·F(z)·(−y, x, 0)·exp(−ρ²/2a²).
inline double current_amplitude(const BoundState& bs) {
    return bs.norm * bs.norm / (2.0 * bs.a * bs.a);
}

/// Gauge-invariant probability current j = Im(Ψ*∇Ψ) − (e/c) A |Ψ|², evaluated
/// from the wave function in the requested gauge.
inline VectorSample current(const Position& p, const BoundState& bs, Gauge gauge = Gauge::landau) {
    const double a2 = bs.a * bs.a;
    std::complex<double> psi = psi0(p, bs);
    // ∇ of the exponent of Ψ0 in the Landau gauge A = (−yB, 0, 0)
    std::complex<double> gx{-p.x / (2.0 * a2), p.y / (2.0 * a2)};
    std::complex<double> gy{-p.y / (2.0 * a2), p.x / (2.0 * a2)};
    // (e/c)·A in units with eB/c = −1/a²
    Vec3 eA;
    if (gauge == Gauge::landau) {
        eA = {p.y / a2, 0.0, 0.0};
    } else {
        // f = −Bxy/2 takes A to (B/2)(−y, x, 0); Ψ picks up exp(−i xy / 2a²)
        const std::complex<double> phase = std::exp(std::complex<double>{0.0, -p.x * p.y / (2.0 * a2)});
        psi *= phase;
        gx += std::complex<double>{0.0, -p.y / (2.0 * a2)};
        gy += std::complex<double>{0.0, -p.x / (2.0 * a2)};
        eA = {p.y / (2.0 * a2), -p.x / (2.0 * a2), 0.0};
    }
    const std::complex<double> dx = psi * gx, dy = psi * gy;
    const double rho2 = std::norm(psi);
    const std::complex<double> cpsi = std::conj(psi);
    // ∂zΨ = −sgn(z)Ψ/l is a real multiple of Ψ, so Im(Ψ*∂zΨ) = 0; Az = 0 in both gauges
    return {p, {std::imag(cpsi * dx) - eA.x * rho2, std::imag(cpsi * dy) - eA.y * rho2, 0.0}};
}

/// Closed-form current J0·F(z)·(−y, x, 0)·exp(−ρ²/2a²).
inline VectorSample current_closed_form(const Position& p, const BoundState& bs,
                                        DecayConvention c = DecayConvention::derived) {
    const double s = current_amplitude(bs) * envelope(p.z, bs, c) *
                     std::exp(-(p.x * p.x + p.y * p.y) / (2.0 * bs.a * bs.a));
    return {p, {-s * p.y, s * p.x, 0.0}};
}

// ---------------------------------------------------------------------------
// Finite-difference diagnostics

struct DivergenceResult {
    std::vector<double> values;
    bool kink_warning = false;  // some stencil straddled the z = 0 plane
};

/// Central-difference ∇·J at each point with step h.
template <class Field>
DivergenceResult divergence(Field&& field, std::span<const Position> points, double h) {
    detail::require(h > 0.0, "stencil step must be positive");
    DivergenceResult out;
    out.values.reserve(points.size());
    for (const auto& p : points) {
        if (std::abs(p.z) < h) out.kink_warning = true;
        const Vec3 xp = field(Position{p.x + h, p.y, p.z}), xm = field(Position{p.x - h, p.y, p.z});
        const Vec3 yp = field(Position{p.x, p.y + h, p.z}), ym = field(Position{p.x, p.y - h, p.z});
        const Vec3 zp = field(Position{p.x, p.y, p.z + h}), zm = field(Position{p.x, p.y, p.z - h});
        out.values.push_back(((xp.x - xm.x) + (yp.y - ym.y) + (zp.z - zm.z)) / (2.0 * h));
    }
    return out;
}

/// Central-difference ∂j_y/∂x − ∂j_x/∂y.
template <class Field>
double curl_z_numeric(Field&& field, const Position& p, double h) {
    const Vec3 xp = field(Position{p.x + h, p.y, p.z}), xm = field(Position{p.x - h, p.y, p.z});
    const Vec3 yp = field(Position{p.x, p.y + h, p.z}), ym = field(Position{p.x, p.y - h, p.z});
    return ((xp.y - xm.y) - (yp.x - ym.x)) / (2.0 * h);
}

// ---------------------------------------------------------------------------
// Vortex structure in planes z = const

/// A(z) = 2π J0 F(z), so that the circulation on a circle of radius r is A r² e^{−r²/2a²}.
inline double vortex_amplitude(const BoundState& bs, double z = 0.0,
                               DecayConvention c = DecayConvention::derived) {
    return 2.0 * std::numbers::pi * current_amplitude(bs) * envelope(z, bs, c);
}

inline double vortex_intensity(double r, const BoundState& bs, double z = 0.0) {
    detail::require(r >= 0.0, "radius must be non-negative");
    return vortex_amplitude(bs, z) * r * r * std::exp(-r * r / (2.0 * bs.a * bs.a));
}

inline double curl_z(double r, const BoundState& bs, double z = 0.0) {
    detail::require(r >= 0.0, "radius must be non-negative");
    const double t = r * r / (2.0 * bs.a * bs.a);
    return vortex_amplitude(bs, z) / std::numbers::pi * (1.0 - t) * std::exp(-t);
}

/// ∮ j·dl on the circle of radius r at height z, periodic trapezoid rule.
inline double circulation(double r, double z, const BoundState& bs, int points = 1024,
                          Gauge gauge = Gauge::landau) {
    detail::require(points >= 3, "circulation needs at least 3 points");
    const double dtheta = 2.0 * std::numbers::pi / points;
    double sum = 0.0;
    for (int i = 0; i < points; ++i) {
        const double th = i * dtheta;
        const double c = std::cos(th), s = std::sin(th);
        const Vec3 j = current({r * c, r * s, z}, bs, gauge).current;
        sum += -j.x * s + j.y * c;  // tangential component
    }
    return sum * r * dtheta;
}

// ---------------------------------------------------------------------------
// Zero-field comparison state Ψ = (2π l0)^{−1/2} e^{−r/l0} / r

struct ZeroFieldState {
    double l0 = 1.0;
    double e0 = -0.5;

    static ZeroFieldState from_energy(double e0) {
        detail::require(e0 < 0.0, "bound-state energy must be negative");
        return {1.0 / std::sqrt(-2.0 * e0), e0};
    }
};

/// Radial probability density 4πr²|Ψ|² = 2 e^{−2r/l0} / l0.
inline double zero_field_density(double r, const ZeroFieldState& zf) {
    detail::require(r >= 0.0, "radius must be non-negative");
    return 2.0 * std::exp(-2.0 * r / zf.l0) / zf.l0;
}

inline double zero_field_psi(double r, const ZeroFieldState& zf) {
    detail::require(r > 0.0, "radius must be positive");
    return std::exp(-r / zf.l0) / (r * std::sqrt(2.0 * std::numbers::pi * zf.l0));
}

/// Real wave function, no vector potential: the current vanishes identically.
inline Vec3 zero_field_current(const Position&, const ZeroFieldState&) { return {}; }

// ---------------------------------------------------------------------------

struct LocalizationReport {
    double rms_rho = 0.0;         // √⟨x² + y²⟩
    double mean_abs_z = 0.0;      // ⟨|z|⟩
    double transverse_scale = 0.0;    // √2·a
    double longitudinal_scale = 0.0;  // 2l
};

/// Moments of |Ψ0|² by quadrature. The density factorises into ρ and z parts,
/// so each moment is a ratio of one-dimensional integrals along an axis.
inline LocalizationReport localization_report(const BoundState& bs) {
    const QuadratureSpec spec{QuadratureRule::adaptive_simpson, 1e-13 * bs.norm * bs.norm * bs.a * bs.l, 40};
    const double rho_max = 14.0 * bs.a;
    const double z_max = 40.0 * bs.l;
    auto radial = [&](double rho) { return density({rho, 0.0, 0.0}, bs); };
    auto axial = [&](double z) { return density({0.0, 0.0, z}, bs); };
    const double m0 = integrate_checked([&](double r) { return r * radial(r); }, 0.0, rho_max, spec).value;
    const double m2 = integrate_checked([&](double r) { return r * r * r * radial(r); }, 0.0, rho_max, spec).value;
    const double z0 = integrate_checked(axial, 0.0, z_max, spec).value;
    const double z1 = integrate_checked([&](double z) { return z * axial(z); }, 0.0, z_max, spec).value;
    return {std::sqrt(m2 / m0), z1 / z0, std::numbers::sqrt2 * bs.a, 2.0 * bs.l};
}

}  // namespace landau_delta::boundstate
