#pragma once
// Decay of the bound state in a weak electric field ε ∥ B.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "boundstate.hpp"
#include "errors.hpp"
#include "special_functions.hpp"

namespace landau_delta::tunneling {

/// Outgoing Airy solution V(Z) = π(Bi(Z) + i·Ai(Z)). For Z ≫ 1 this is
/// (√π / Z^{1/4}) [exp(2Z^{3/2}/3) + (i/2) exp(−2Z^{3/2}/3)] times the
/// asymptotic series; the exponentially small imaginary part carries the flux.
inline std::complex<double> airy_outgoing(double z) {
    const auto v = special::airy(z);
    return std::numbers::pi * std::complex<double>{v.bi, v.ai};
}

inline std::complex<double> airy_outgoing_derivative(double z) {
    const auto v = special::airy(z);
    return std::numbers::pi * std::complex<double>{v.bi_prime, v.ai_prime};
}

/// Leading two-exponential form only, valid for Z ≫ 1.
inline std::complex<double> airy_outgoing_leading(double z) {
    detail::require(z > 0.0, "leading asymptotic form needs Z > 0");
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double pre = std::sqrt(std::numbers::pi) / std::pow(z, 0.25);
    return pre * std::complex<double>{std::exp(zeta), 0.5 * std::exp(-zeta)};
}

/// Im(V* V'), constant (−π) by the Ai/Bi Wronskian; proportional to the z-flux.
inline double airy_flux(double z) {
    return std::imag(std::conj(airy_outgoing(z)) * airy_outgoing_derivative(z));
}

/// Transverse Fourier overlap (1/4π²) ∫dxdy Ψ0(x, y, 0) e^{−i(p1 x + p2 y)/ħ}, ħ = 1:
///   norm · a²/(√2 π) · exp(−a²(p1² + p2²)/2 − i a² p1 p2).
inline std::complex<double> overlap_F(double p1, double p2, const boundstate::BoundState& bs) {
    const double a2 = bs.a * bs.a;
    const double pre = bs.norm * a2 / (std::numbers::sqrt2 * std::numbers::pi);
    return pre * std::exp(std::complex<double>{-0.5 * a2 * (p1 * p1 + p2 * p2), -a2 * p1 * p2});
}

struct TunnelingInput {
    double eps_ratio = 0.0;  // ε / ε0, ε0 = √m |E0|^{3/2} / (ħ|e|)
    boundstate::BoundState bs;

    double a_over_l() const { return bs.a / bs.l; }
};

struct TunnelingResult {
    double w = 0.0;         // decay probability per unit time, units |E0|/ħ
    double exponent = 0.0;  // −4√2 / (3 ε/ε0)
    double prefactor = 0.0;
};

inline double rate_exponent(double eps_ratio) {
    return -4.0 * std::numbers::sqrt2 / (3.0 * eps_ratio);
}

/// Total rate from the flux across a plane z = const. Computed with ħ = m = l = 1,
/// where |E0| = 1/2 and the field force is |e|ε = (ε/ε0)/(2√2). The rate is the
/// magnitude of the flux.
inline TunnelingResult decay_rate(const TunnelingInput& in) {
    detail::require(std::isfinite(in.eps_ratio) && in.eps_ratio > 0.0,
                    "electric field ratio must be positive");
    if (in.eps_ratio >= 1.0)
        throw ValidityError("weak-field condition eps/eps0 < 1 violated (eps_ratio = " +
                            std::to_string(in.eps_ratio) + ")");
    detail::require(in.bs.a > 0.0 && in.bs.l > 0.0, "bound state lengths must be positive");
    const double a = in.a_over_l();
    const double force = in.eps_ratio / (2.0 * std::numbers::sqrt2);
    const double den = a * a * force + 1.0;
    const double pre_l = 2.0 * std::sqrt(std::numbers::pi) * a * a * force / den *
                         (1.0 + force / (2.0 * den));
    TunnelingResult r;
    r.exponent = rate_exponent(in.eps_ratio);
    r.prefactor = 2.0 * pre_l;  // time unit ml²/ħ → ħ/|E0|
    r.w = r.prefactor * std::exp(r.exponent);
    return r;
}

}  // namespace landau_delta::tunneling
