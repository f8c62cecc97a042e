#pragma once
// Unit system and parameter reduction.
//
// Reduced units: energies in ħω, lengths in the magnetic length a, so the
// spectral variable is x = E/(ħω). Gaussian units throughout; the speed of
// light enters only through the cyclotron frequency ω = |e|B/(mc).

#include <cmath>
#include <numbers>
#include <optional>

#include "errors.hpp"

namespace landau_delta {

inline constexpr double gaussian_speed_of_light = 2.99792458e10;  // cm/s

/// 8√2π: converts λ/a into the spectral coupling g.
inline constexpr double coupling_denominator = 8.0 * std::numbers::sqrt2 * std::numbers::pi;

struct PhysicalParams {
    double mass = 1.0;
    double charge = 1.0;  // magnitude |e|
    double hbar = 1.0;
    double field = 1.0;   // B > 0
    double lambda = 1.0;  // delta-well strength, length units
    std::optional<double> well_depth;
    std::optional<double> well_radius;
    double electric_field = 0.0;
    double speed_of_light = gaussian_speed_of_light;
    std::optional<double> omega_override;

    /// For SI (or any other) users: supply ω directly, bypassing |e|B/(mc).
    static PhysicalParams with_omega(double mass, double hbar, double omega, double lambda) {
        PhysicalParams p;
        p.mass = mass;
        p.hbar = hbar;
        p.lambda = lambda;
        p.omega_override = omega;
        return p;
    }

    double omega() const {
        return omega_override ? *omega_override : charge * field / (mass * speed_of_light);
    }

    double magnetic_length() const { return std::sqrt(hbar / (mass * omega())); }

    void validate() const {
        detail::require(mass > 0.0 && std::isfinite(mass), "mass must be positive");
        detail::require(hbar > 0.0 && std::isfinite(hbar), "hbar must be positive");
        detail::require(lambda > 0.0 && std::isfinite(lambda), "coupling lambda must be positive");
        detail::require(electric_field >= 0.0, "electric field must be non-negative");
        if (omega_override) {
            detail::require(*omega_override > 0.0 && std::isfinite(*omega_override),
                            "omega must be positive");
        } else {
            detail::require(field > 0.0 && std::isfinite(field), "magnetic field must be positive");
            detail::require(charge > 0.0 && std::isfinite(charge), "charge magnitude must be positive");
            detail::require(speed_of_light > 0.0, "speed of light must be positive");
        }
        const double a = magnetic_length();
        detail::require(std::isfinite(a) && a > 0.0, "magnetic length is not finite and positive");
    }
};

/// The reduced problem. `g` is the single source of truth for the 3D coupling.
struct DimensionlessSetup {
    double g = 0.0;
    long cutoff = 1;
    double lambda_over_a = 0.0;
    double two_d_lambda = 0.0;

    static DimensionlessSetup from_lambda_over_a(double lambda_over_a, long cutoff,
                                                 double two_d_lambda = 0.0) {
        detail::require(lambda_over_a > 0.0 && std::isfinite(lambda_over_a),
                        "lambda/a must be positive");
        detail::require(cutoff >= 1, "cutoff N must be >= 1");
        detail::require(two_d_lambda >= 0.0, "2D coupling must be non-negative");
        return {lambda_over_a / coupling_denominator, cutoff, lambda_over_a, two_d_lambda};
    }
};

inline DimensionlessSetup reduce(const PhysicalParams& p, long cutoff = 1'000'000,
                                 double two_d_lambda = 0.0) {
    p.validate();
    return DimensionlessSetup::from_lambda_over_a(p.lambda / p.magnetic_length(), cutoff,
                                                  two_d_lambda);
}

/// λ = 2 m U0 R³ / ħ² for the rectangular well that the delta potential limits.
inline double well_to_lambda(double well_depth, double well_radius, double mass, double hbar) {
    detail::require(well_depth > 0.0, "well depth U0 must be positive");
    detail::require(well_radius > 0.0, "well radius R must be positive");
    detail::require(mass > 0.0 && hbar > 0.0, "mass and hbar must be positive");
    return 2.0 * mass * well_depth * well_radius * well_radius * well_radius / (hbar * hbar);
}

enum class Spin : int { down = -1, up = +1 };

struct LandauLevel {
    int n = 0;
    double p3 = 0.0;
    Spin spin = Spin::down;
    double energy = 0.0;
};

/// Reduced energy (n + 1/2) + p3²/2 + s/2 for m_e = m.
inline double landau_energy(int n, double p3, Spin s) {
    detail::require(n >= 0, "Landau index n must be >= 0");
    // discrete part first (exact in binary) so degenerate pairs compare equal bitwise
    const double discrete = (n + 0.5) + 0.5 * static_cast<int>(s);
    return discrete + 0.5 * p3 * p3;
}

inline LandauLevel make_landau_level(int n, double p3, Spin s) {
    return {n, p3, s, landau_energy(n, p3, s)};
}

}  // namespace landau_delta
