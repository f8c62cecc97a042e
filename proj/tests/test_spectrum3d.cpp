#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "landau_delta/oracle.hpp"
#include "landau_delta/params.hpp"
#include "landau_delta/spectrum3d.hpp"

using namespace landau_delta;
using namespace landau_delta::spectrum3d;

namespace {

// Reference f(x): plain term-by-term long double sum.
long double direct_f(long double x, long cutoff) {
    long double s = 0.0L;
    for (long n = cutoff; n >= 0; --n) s += 1.0L / std::sqrt(std::fabs(static_cast<long double>(n) - x));
    return s;
}

SpectralFunction make_sf(long cutoff, TailMode mode = TailMode::integral_corrected) {
    SpectralFunction sf;
    sf.cutoff = cutoff;
    sf.tail_mode = mode;
    return sf;
}

constexpr double weak_lambda_over_a = 0.01;

}  // namespace

TEST(Spectrum3d, ExactSumAtHalf) {
    const double f = f3(0.5, make_sf(10, TailMode::exact));
    EXPECT_NEAR(f, static_cast<double>(direct_f(0.5L, 10)), 1e-14);
    EXPECT_NEAR(f, 7.1345, 5e-5);
}

TEST(Spectrum3d, DecaysToZeroFarBelow) {
    const auto sf = make_sf(1000, TailMode::exact);
    double prev = f3(-1.0, sf);
    for (double b = 2.0; b < 1e14; b *= 10.0) {
        const double v = f3(-b, sf);
        EXPECT_LT(v, prev);
        EXPECT_GT(v, 0.0);
        // every one of the N + 1 terms is below 1/√b
        EXPECT_LT(v, 1001.0 / std::sqrt(b));
        prev = v;
    }
}

TEST(Spectrum3d, CorrectedMatchesExactAtHalf) {
    const auto exact = f3_with_bound(0.5, make_sf(1'000'000, TailMode::exact));
    const auto corr = f3_with_bound(0.5, make_sf(1'000'000));
    EXPECT_LE(std::abs(exact.value - corr.value), corr.error_bound);
    EXPECT_NEAR(exact.value, static_cast<double>(direct_f(0.5L, 1'000'000)), 1e-11);
}

TEST(Spectrum3d, TailBoundHoldsOnRandomPoints) {
    std::mt19937_64 rng(20260501);
    std::uniform_real_distribution<double> dist(-5.0, 20.0);
    const auto exact = make_sf(1'000'000, TailMode::exact);
    const auto corr = make_sf(1'000'000);
    for (int i = 0; i < 100; ++i) {
        const double x = dist(rng);
        const auto e = f3_with_bound(x, exact);
        const auto c = f3_with_bound(x, corr);
        ASSERT_LE(std::abs(e.value - c.value), c.error_bound) << "x = " << x;
    }
}

TEST(Spectrum3d, SingularityGuard) {
    const auto sf = make_sf(100);
    EXPECT_THROW(f3(3.0, sf), SingularityError);
    EXPECT_THROW(f3(3.0 + 1e-13, sf), SingularityError);
    EXPECT_NO_THROW(f3(3.0 + 1e-9, sf));
    EXPECT_NO_THROW(f3(101.0, sf));  // outside 0..N
    try {
        f3(7.0, sf);
        FAIL();
    } catch (const SingularityError& e) {
        EXPECT_EQ(e.level(), 7);
    }
}

TEST(Spectrum3d, OneRootPerInterval) {
    const double g = weak_lambda_over_a / coupling_denominator;
    const auto sf = make_sf(1'000'000);
    const SolverOptions opt;
    const auto r = solve_spectrum(g, sf, 10, opt);
    ASSERT_EQ(r.levels.size(), 10u);
    EXPECT_LT(r.ground.x, 0.0);
    EXPECT_LE(r.ground.residual, opt.residual_tolerance);
    double prev = r.ground.x;
    for (const auto& lv : r.levels) {
        EXPECT_GT(lv.x, lv.n - 1);
        EXPECT_LT(lv.x, lv.n);
        EXPECT_GT(lv.x, prev);
        EXPECT_LE(lv.residual, opt.residual_tolerance);
        EXPECT_LT(lv.offset, 0.0);
        prev = lv.x;
    }
}

TEST(Spectrum3d, GroundRootIsUnique) {
    const double g = weak_lambda_over_a / coupling_denominator;
    const auto sf = make_sf(1'000'000);
    auto h = [&](double x) { return g * f3(x, sf) - 1.0; };
    const auto br = oracle::dense_scan_roots(h, -10.0, -sf.guard, 1000);
    ASSERT_EQ(br.size(), 1u);
    const auto root = solve_ground(g, sf);
    EXPECT_GE(root.x, br[0].lo);
    EXPECT_LE(root.x, br[0].hi);
}

TEST(Spectrum3d, GroundRegressionFixture) {
    // g = 0.05, N = 10⁶: dense scan on the corrected f, bisection on the exact sum
    const double g = 0.05;
    const auto corr = make_sf(1'000'000);
    const auto exact = make_sf(1'000'000, TailMode::exact);
    auto scan = [&](double x) { return g * f3(x, corr) - 1.0; };
    auto fine = [&](double x) { return g * f3(x, exact) - 1.0; };
    const double lo = -1e10, hi = -1e-12;
    const long samples = 1000;
    const auto br = oracle::dense_scan_roots(scan, lo, hi, samples);
    ASSERT_EQ(br.size(), 1u);
    // widen by one sample on each side in case the corrected sum shifts the sign change
    const double step = (hi - lo) / (samples - 1);
    oracle::Bracket b{br[0].lo - step, std::min(br[0].hi + step, hi), 0.0, 0.0};
    b.f_lo = fine(b.lo);
    b.f_hi = fine(b.hi);
    ASSERT_LT(b.f_lo, 0.0);
    ASSERT_GT(b.f_hi, 0.0);
    const double x_oracle = oracle::bisect(fine, b, 0.0, 200);
    const auto root = solve_ground(g, corr);
    EXPECT_NEAR(root.x, x_oracle, 1e-12 * std::abs(x_oracle));
    // integral estimate 2(√(N+b) − √b) = 1/g gives √b = (N − 1/(4g²))·g
    const double sqrt_b = (1e6 - 1.0 / (4.0 * g * g)) * g;
    EXPECT_NEAR(root.x / -(sqrt_b * sqrt_b), 1.0, 1e-3);
}

TEST(Spectrum3d, GroundMovesDownWithCoupling) {
    const auto sf = make_sf(1'000'000);
    double prev = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double g = 1e-4 * std::pow(1.6, i);
        const double x0 = solve_ground(g, sf).x;
        EXPECT_LT(x0, prev) << "g = " << g;
        prev = x0;
    }
}

TEST(Spectrum3d, GroundApproachesZeroForWeakCoupling) {
    const auto sf = make_sf(1000);
    double prev = -1.0;
    for (double g : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const double x0 = solve_ground(g, sf).x;
        EXPECT_LT(x0, 0.0);
        EXPECT_GT(x0, prev);
        prev = x0;
    }
    EXPECT_GT(prev, -1e-9);
}

TEST(Spectrum3d, NoRootBelowLevelRaisesBracketingError) {
    // λ/a = 0.1 at N = 10⁶: 1/g ≈ 355 lies below min f ≈ 2001 on (0, 1)
    const double g = 0.1 / coupling_denominator;
    const auto sf = make_sf(1'000'000);
    try {
        solve_level(1, g, sf);
        FAIL() << "expected BracketingError";
    } catch (const BracketingError& e) {
        EXPECT_LT(e.lo(), e.hi());
        EXPECT_GT(e.f_lo(), 0.0);
        EXPECT_GT(e.f_hi(), 0.0);
    }
}

TEST(Spectrum3d, PerturbativeShift) {
    EXPECT_EQ(perturbative_shift(0.0), 0.0);
    EXPECT_DOUBLE_EQ(perturbative_shift(0.01), -1e-4);
    EXPECT_DOUBLE_EQ(published_perturbative_shift(0.01), -4e-4);
}

TEST(Spectrum3d, TailSubtractedShiftTracksMinusGSquared) {
    const auto sf = make_sf(1000);
    for (double g : {1e-3, 3e-3}) {
        const double x0 = solve_ground(g, sf).x;
        const double d = tail_subtracted_shift(x0, g, sf.cutoff);
        EXPECT_NEAR(d / perturbative_shift(g), 1.0, 1e-6) << "g = " << g;
    }
}

TEST(Spectrum3d, RegularSum) {
    EXPECT_EQ(regular_sum(0), 0.0);
    EXPECT_DOUBLE_EQ(regular_sum(4), 1.0 + 1.0 / std::sqrt(2.0) + 1.0 / std::sqrt(3.0) + 0.5);
}

TEST(Spectrum3d, CutoffFromCoupling) {
    EXPECT_EQ(cutoff_from_coupling(1e300, -1.0), 1);
    EXPECT_EQ(cutoff_from_coupling(12.0 * std::sqrt(2.0) * std::numbers::pi, 0.0), 1);
    const long expected =
        static_cast<long>(std::ceil(std::pow(120.0 * std::sqrt(2.0) * std::numbers::pi + 1.0, 2.0 / 3.0)));
    EXPECT_EQ(cutoff_from_coupling(0.1, -1.0), expected);
    EXPECT_EQ(expected, 66);
    EXPECT_THROW(cutoff_from_coupling(0.0, -1.0), InvalidParameter);
    EXPECT_THROW(cutoff_from_coupling(-0.1, -1.0), InvalidParameter);
}

TEST(Spectrum3d, NormalizationSum) {
    EXPECT_EQ(normalization_sum(1.0, 0), 1.0);
    EXPECT_THROW(normalization_sum(0.0, 10), InvalidParameter);
    // Hurwitz tail Σ_{n>N} n^{−3/2} ≈ 2/√(N + 1/2) to O(N^{−5/2})
    const long n = 1'000'000;
    const double zeta_3_2 = 2.612375348685488;
    EXPECT_NEAR(normalization_sum(1.0, n - 1) + 2.0 / std::sqrt(n + 0.5), zeta_3_2, 1e-12);
    double prev = 0.0;
    for (long k = 0; k < 200; k += 7) {
        const double s = normalization_sum(0.3, k);
        EXPECT_GT(s, prev);
        prev = s;
    }
}
