#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "landau_delta/boundstate.hpp"
#include "landau_delta/quadrature.hpp"

using namespace landau_delta;
using namespace landau_delta::boundstate;

namespace {

const BoundState unit_state = BoundState::from_lengths(1.0, 1.0);

double rel_diff(const Vec3& a, const Vec3& b) {
    const Vec3 d{a.x - b.x, a.y - b.y, a.z - b.z};
    const double scale = std::max(norm(a), norm(b));
    return scale == 0.0 ? norm(d) : norm(d) / scale;
}

std::vector<Position> grid21(double half, double z_half) {
    std::vector<Position> pts;
    for (int k = 0; k < 21; ++k)
        for (int j = 0; j < 21; ++j)
            for (int i = 0; i < 21; ++i)
                pts.push_back({-half + half * i / 10.0, -half + half * j / 10.0, -z_half + z_half * k / 10.0});
    return pts;
}

}  // namespace

TEST(BoundState, PsiAtOriginIsNorm) {
    const auto bs = BoundState::from_lengths(1.3, 0.4);
    EXPECT_EQ(psi0({0, 0, 0}, bs), std::complex<double>(bs.norm, 0.0));
    EXPECT_NEAR(bs.norm * bs.norm * 2.0 * std::numbers::pi * bs.a * bs.a * bs.l, 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(bs.e0, -0.5 / (0.4 * 0.4));
}

TEST(BoundState, ModulusSymmetries) {
    const auto bs = BoundState::from_lengths(0.8, 1.9);
    for (const Position p : {Position{0.3, -1.2, 0.7}, Position{2.0, 1.1, -0.2}, Position{-0.4, 0.05, 3.0}}) {
        const double m = std::abs(psi0(p, bs));
        EXPECT_NEAR(std::abs(psi0({-p.x, -p.y, p.z}, bs)), m, 1e-15 * m);
        EXPECT_NEAR(std::abs(psi0({p.x, p.y, -p.z}, bs)), m, 1e-15 * m);
    }
}

TEST(BoundState, NormalizedByCubature) {
    const auto bs = BoundState::from_lengths(1.0, 0.6);
    const double half = 10.0 * bs.a, zh = 10.0 * bs.a;
    const QuadratureSpec inner{QuadratureRule::adaptive_simpson, 1e-10, 30};
    auto over_x = [&](double y, double z) {
        return integrate([&](double x) { return density({x, y, z}, bs); }, -half, half, inner).value;
    };
    auto over_xy = [&](double z) {
        return integrate([&](double y) { return over_x(y, z); }, -half, half, inner).value;
    };
    // split at the z = 0 kink
    const double total = integrate(over_xy, -zh, 0.0, inner).value + integrate(over_xy, 0.0, zh, inner).value;
    EXPECT_NEAR(total, 1.0, 1e-6);
}

TEST(BoundState, CurrentVanishesAtOrigin) {
    for (auto g : {Gauge::landau, Gauge::symmetric}) {
        const auto j = current({0, 0, 0}, unit_state, g).current;
        EXPECT_EQ(j.x, 0.0);
        EXPECT_EQ(j.y, 0.0);
        EXPECT_EQ(j.z, 0.0);
    }
}

TEST(BoundState, GaugePathsAgreeOnGrid) {
    const auto bs = BoundState::from_lengths(1.2, 0.7);
    for (const auto& p : grid21(3.0 * bs.a, 2.0 * bs.l)) {
        const auto l = current(p, bs, Gauge::landau).current;
        const auto s = current(p, bs, Gauge::symmetric).current;
        const auto c = current_closed_form(p, bs).current;
        ASSERT_LE(rel_diff(l, s), 1e-12) << p.x << " " << p.y << " " << p.z;
        ASSERT_LE(rel_diff(l, c), 1e-12) << p.x << " " << p.y << " " << p.z;
    }
}

TEST(BoundState, CurrentIsPurelyAzimuthal) {
    const auto bs = BoundState::from_lengths(1.0, 0.5);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (const auto& p : grid21(3.0, 1.0)) {
        for (const auto& j : {current(p, bs, Gauge::landau).current, current(p, bs, Gauge::symmetric).current,
                              current_closed_form(p, bs).current}) {
            ASSERT_EQ(j.z, 0.0);
            // zero up to the rounding of the dot product and of the stored components
            const double scale = std::abs(p.x * j.x) + std::abs(p.y * j.y);
            ASSERT_LE(std::abs(p.x * j.x + p.y * j.y), 4.0 * eps * scale);
        }
    }
}

TEST(BoundState, RotationalSymmetry) {
    const auto bs = BoundState::from_lengths(1.0, 0.8);
    for (double rho : {0.3, 1.0, 2.2})
        for (double z : {0.0, 0.4, -1.1}) {
            const double ref = norm(current({rho, 0.0, z}, bs).current);
            for (int k = 1; k < 16; ++k) {
                const double th = 2.0 * std::numbers::pi * k / 16.0;
                const double v = norm(current({rho * std::cos(th), rho * std::sin(th), z}, bs).current);
                EXPECT_NEAR(v / ref, 1.0, 1e-12);
            }
            EXPECT_NEAR(norm(current({rho, 0.0, -z}, bs).current) / ref, 1.0, 1e-15);
        }
}

TEST(BoundState, DivergenceOfTestFields) {
    const std::vector<Position> pts{{0.5, -0.25, 1.0}, {2.0, 1.5, -0.75}, {-1.0, 0.125, 3.0}};
    auto constant = [](const Position&) { return Vec3{1.5, -2.0, 0.25}; };
    auto radial = [](const Position& p) { return Vec3{p.x, p.y, p.z}; };
    for (double v : divergence(constant, pts, 0.125).values) EXPECT_EQ(v, 0.0);
    for (double v : divergence(radial, pts, 0.125).values) EXPECT_EQ(v, 3.0);
}

TEST(BoundState, DivergenceFreeAtSmallStep) {
    const auto bs = unit_state;
    auto field = [&](const Position& p) { return current_closed_form(p, bs).current; };
    std::vector<Position> pts;
    for (const auto& p : grid21(3.0, 2.0))
        if (std::abs(p.z) >= 0.1) pts.push_back(p);
    const auto d = divergence(field, pts, 1e-3);
    EXPECT_FALSE(d.kink_warning);
    double worst = 0.0;
    for (double v : d.values) worst = std::max(worst, std::abs(v));
    EXPECT_LT(worst / (current_amplitude(bs) / bs.a), 1e-5);
}

TEST(BoundState, DivergenceConvergesAtSecondOrder) {
    const auto bs = unit_state;
    auto field = [&](const Position& p) { return current_closed_form(p, bs).current; };
    const std::vector<Position> pts{{0.7, 1.9, 0.5}, {-1.3, 0.4, 1.0}, {2.1, -0.6, -0.8}, {0.2, -1.1, 2.0}};
    auto worst = [&](double h) {
        double w = 0.0;
        for (double v : divergence(field, pts, h).values) w = std::max(w, std::abs(v));
        return w;
    };
    const double e1 = worst(0.1), e2 = worst(0.05), e3 = worst(0.025);
    EXPECT_GE(std::log2(e1 / e2), 1.9);
    EXPECT_GE(std::log2(e2 / e3), 1.9);
}

TEST(BoundState, KinkPlaneWarning) {
    auto field = [&](const Position& p) { return current_closed_form(p, unit_state).current; };
    const std::vector<Position> pts{{1.0, 1.0, 0.0005}};
    EXPECT_TRUE(divergence(field, pts, 1e-3).kink_warning);
    EXPECT_THROW(divergence(field, pts, 0.0), InvalidParameter);
}

TEST(BoundState, VortexIntensityShape) {
    const auto bs = BoundState::from_lengths(1.4, 0.9);
    EXPECT_EQ(vortex_intensity(0.0, bs), 0.0);
    const double r_peak = std::sqrt(2.0) * bs.a;
    const double amp = vortex_amplitude(bs);
    EXPECT_NEAR(vortex_intensity(r_peak, bs), 2.0 * bs.a * bs.a * amp / std::numbers::e, 1e-15 * amp);
    EXPECT_LT(vortex_intensity(0.99 * r_peak, bs), vortex_intensity(r_peak, bs));
    EXPECT_LT(vortex_intensity(1.01 * r_peak, bs), vortex_intensity(r_peak, bs));
}

TEST(BoundState, CirculationEqualsIntensity) {
    const auto bs = BoundState::from_lengths(1.0, 0.7);
    for (double r : {0.5, 1.0, 2.0}) {
        const double ref = vortex_intensity(r * bs.a, bs);
        for (auto g : {Gauge::landau, Gauge::symmetric}) {
            const double c1 = circulation(r * bs.a, 0.0, bs, 1024, g);
            const double c2 = circulation(r * bs.a, 0.0, bs, 2048, g);
            EXPECT_NEAR(c1 / ref, 1.0, 1e-6) << "r = " << r;
            EXPECT_NEAR(c2 / c1, 1.0, 1e-12) << "r = " << r;
        }
    }
}

TEST(BoundState, PancakeFactorization) {
    const auto bs = BoundState::from_lengths(1.0, 0.6);
    for (double r : {0.5, 1.0, 2.0})
        for (double zl : {0.5, 1.0, 2.0}) {
            const double ratio = circulation(r, zl * bs.l, bs) / circulation(r, 0.0, bs);
            EXPECT_NEAR(ratio, std::exp(-2.0 * zl), 1e-8);
            EXPECT_NEAR(circulation(r, -zl * bs.l, bs) / circulation(r, 0.0, bs), std::exp(-2.0 * zl), 1e-8);
        }
}

TEST(BoundState, PrintedDecayDiffers) {
    const auto bs = unit_state;
    EXPECT_NEAR(envelope(1.0, bs), std::exp(-2.0), 1e-16);
    EXPECT_NEAR(envelope(1.0, bs, DecayConvention::printed), std::exp(-2.0 * std::sqrt(2.0)), 1e-16);
    EXPECT_EQ(envelope(0.0, bs, DecayConvention::printed), 1.0);
}

TEST(BoundState, CurlClosedForm) {
    const auto bs = BoundState::from_lengths(1.1, 0.9);
    EXPECT_NEAR(curl_z(std::sqrt(2.0) * bs.a, bs), 0.0, 1e-16);
    // ∫ curl dA = 2π ∫ r curl dr
    const double flux = integrate_checked([&](double r) { return 2.0 * std::numbers::pi * r * curl_z(r, bs); },
                                          0.0, 20.0 * bs.a, {QuadratureRule::adaptive_simpson, 1e-14, 40})
                            .value;
    EXPECT_NEAR(flux, 0.0, 1e-12);
}

TEST(BoundState, CurlFiniteDifferenceConverges) {
    const auto bs = unit_state;
    auto field = [&](const Position& p) { return current_closed_form(p, bs).current; };
    for (double r : {0.4, 1.0, 1.8}) {
        const Position p{r * std::cos(0.3), r * std::sin(0.3), 0.0};
        const double exact = curl_z(r, bs);
        const double e1 = std::abs(curl_z_numeric(field, p, 0.02) - exact);
        const double e2 = std::abs(curl_z_numeric(field, p, 0.01) - exact);
        EXPECT_LT(e1, 1e-3 * vortex_amplitude(bs));
        EXPECT_GT(std::log2(e1 / e2), 1.9) << "r = " << r;
    }
}

TEST(BoundState, ZeroFieldState) {
    const auto zf = ZeroFieldState::from_energy(-0.5 / (1.3 * 1.3));
    EXPECT_NEAR(zf.l0, 1.3, 1e-15);
    const QuadratureSpec spec{QuadratureRule::adaptive_simpson, 1e-13, 40};
    const double upper = 40.0 * zf.l0;
    const double total = integrate_checked([&](double r) { return zero_field_density(r, zf); }, 0.0, upper, spec).value;
    const double mean = integrate_checked([&](double r) { return r * zero_field_density(r, zf); }, 0.0, upper, spec).value;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(mean, zf.l0 / 2.0, 1e-12);
    double prev = zero_field_density(0.0, zf);
    for (double r = 0.01; r < 5.0; r += 0.01) {
        EXPECT_LT(zero_field_density(r, zf), prev);
        prev = zero_field_density(r, zf);
    }
    // 4πr²|Ψ|² reproduces the radial density
    for (double r : {0.1, 1.0, 3.0})
        EXPECT_NEAR(4.0 * std::numbers::pi * r * r * std::pow(zero_field_psi(r, zf), 2), zero_field_density(r, zf),
                    1e-14);
    const auto j = zero_field_current({0.3, 0.2, 0.1}, zf);
    EXPECT_EQ(norm(j), 0.0);
}

TEST(BoundState, LocalizationReport) {
    for (double a : {1.0, 0.25}) {
        const auto bs = BoundState::from_lengths(a, 0.7);
        const auto rep = localization_report(bs);
        EXPECT_NEAR(rep.rms_rho / a, std::sqrt(2.0), 1e-10);
        EXPECT_NEAR(rep.mean_abs_z / bs.l, 0.5, 1e-10);
        EXPECT_DOUBLE_EQ(rep.transverse_scale, std::sqrt(2.0) * a);
        EXPECT_DOUBLE_EQ(rep.longitudinal_scale, 1.4);
    }
}

TEST(BoundState, FromReducedEnergy) {
    const auto bs = BoundState::from_reduced_energy(-0.125);
    EXPECT_DOUBLE_EQ(bs.a, 1.0);
    EXPECT_DOUBLE_EQ(bs.l, 2.0);
    EXPECT_DOUBLE_EQ(bs.e0, -0.125);
    EXPECT_THROW(BoundState::from_reduced_energy(0.1), InvalidParameter);
}
