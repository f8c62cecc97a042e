// Solve the lowest levels for a weak well and build the bound state from x0.
#include <cmath>
#include <cstdio>

#include "landau_delta/landau_delta.hpp"

int main() {
    using namespace landau_delta;

    const auto setup = DimensionlessSetup::from_lambda_over_a(0.01, 1'000'000);
    spectrum3d::SpectralFunction sf;
    sf.cutoff = setup.cutoff;

    const auto spec = spectrum3d::solve_spectrum(setup.g, sf, 5);
    std::printf("g = %.6e, N = %ld\n", setup.g, setup.cutoff);
    std::printf("ground  x0 = %.12e  (residual %.1e)\n", spec.ground.x, spec.ground.residual);
    for (const auto& r : spec.levels)
        std::printf("n = %d   x  = %.12f  delta = %.6e\n", r.n, r.x, r.offset);
    std::printf("-g^2 = %.6e, -4g^2 = %.6e\n", spectrum3d::perturbative_shift(setup.g),
                spectrum3d::published_perturbative_shift(setup.g));

    const auto bs = boundstate::BoundState::from_reduced_energy(spec.ground.x);
    std::printf("l/a = %.4f, vortex peak at r = sqrt(2) a: I = %.6e\n", bs.l,
                boundstate::vortex_intensity(std::sqrt(2.0), bs));

    const auto rate = tunneling::decay_rate({0.02, bs});
    std::printf("eps/eps0 = 0.02: w = %.6e (exponent %.4f)\n", rate.w, rate.exponent);
}
