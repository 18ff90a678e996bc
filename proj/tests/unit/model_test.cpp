#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "goodwin/errors.hpp"
#include "goodwin/model.hpp"
#include "support/oracles.hpp"

namespace goodwin {
namespace {

const GoodwinParameters kAustralia{0.0166, 0.0226, 2.4994, 0.6236, 0.6710};
const GoodwinParameters kUk{0.0221, 0.003690, 2.5694, 0.1854, 0.219};

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected goodwin::Error";
    return ErrorCode::usage;
}

TEST(VectorField, AustraliaMatchesDirectArithmetic) {
    // 0.90 * (-0.6402 + 0.6710 * 0.95), 0.95 * (0.10 / 2.4994 - 0.0392)
    const Derivative d = vector_field({0.90, 0.95}, kAustralia);
    EXPECT_NEAR(d.du, -0.002475000000000027, 1e-15);
    EXPECT_NEAR(d.dv, 0.0007691221893254295, 1e-15);
}

TEST(VectorField, ZeroSlopeDecouplesWageShare) {
    GoodwinParameters p = kAustralia;
    p.rho = 0.0;
    for (double v : {0.1, 0.5, 0.95, 3.0}) {
        EXPECT_DOUBLE_EQ(vector_field({0.7, v}, p).du, -0.7 * (p.alpha + p.gamma));
    }
}

TEST(VectorField, RejectsBadInput) {
    GoodwinParameters p = kAustralia;
    p.sigma = 0.0;
    EXPECT_EQ(code_of([&] { vector_field({0.9, 0.9}, p); }), ErrorCode::parameter);
    p.sigma = -1.0;
    EXPECT_EQ(code_of([&] { vector_field({0.9, 0.9}, p); }), ErrorCode::parameter);
    EXPECT_EQ(code_of([&] { vector_field({NAN, 0.9}, kAustralia); }), ErrorCode::domain);
    p = kAustralia;
    p.gamma = std::numeric_limits<double>::infinity();
    EXPECT_EQ(code_of([&] { vector_field({0.9, 0.9}, p); }), ErrorCode::domain);
}

TEST(Equilibrium, AustraliaRoundsToPrintedCells) {
    const EquilibriumPoint eq = equilibrium(kAustralia);
    EXPECT_NEAR(eq.u_star, 0.90, 0.005);
    EXPECT_NEAR(eq.v_star, 0.95, 0.005);
    EXPECT_TRUE(eq.interior);
}

TEST(Equilibrium, UsWithRecomputedHarvieGamma) {
    // Harvie-scale US with the sign of gamma recomputed: (0.0111 - 8.42) / -7.92.
    const EquilibriumPoint eq = equilibrium({0.0111, 0.0206, 1.7751, -8.42, -7.92});
    EXPECT_NEAR(eq.v_star, 1.06, 0.005);
    EXPECT_TRUE(eq.interior);  // both signs flipped leave v* positive
}

TEST(Equilibrium, GermanyWithRecomputedRho) {
    const EquilibriumPoint eq = equilibrium({0.0329, 0.004142, 2.4941, 0.8549, 0.9244});
    EXPECT_NEAR(eq.v_star, 0.96, 0.005);
}

TEST(Equilibrium, OutOfRangeValuesAreReturned) {
    // Harvie's printed Germany coefficients put v* above one.
    const EquilibriumPoint eq = equilibrium({0.0329, 0.004142, 2.4941, 85.49, 65.55});
    EXPECT_NEAR(eq.v_star, 1.30, 0.005);
    EXPECT_TRUE(eq.interior);  // v* > 1 is still interior in the sense of the flag
}

TEST(Equilibrium, NoNetGrowthGivesUnitWageShare) {
    for (double sigma : {0.5, 2.0, 7.0}) {
        EXPECT_DOUBLE_EQ(equilibrium({0.02, -0.02, sigma, 0.5, 0.6}).u_star, 1.0);
    }
}

TEST(Equilibrium, ZeroSlopeIsAnError) {
    GoodwinParameters p = kAustralia;
    p.rho = 0.0;
    EXPECT_EQ(code_of([&] { equilibrium(p); }), ErrorCode::equilibrium_undefined);
}

TEST(Equilibrium, InteriorFlag) {
    EXPECT_TRUE(kAustralia.admits_interior_equilibrium());
    GoodwinParameters p = kAustralia;
    p.rho = -p.rho;  // v* < 0
    EXPECT_FALSE(p.admits_interior_equilibrium());
    p = kAustralia;
    p.sigma = 30.0;  // u* < 0
    EXPECT_FALSE(p.admits_interior_equilibrium());
    p = kAustralia;
    p.alpha = -0.05;  // alpha + beta < 0 gives u* > 1
    EXPECT_FALSE(p.admits_interior_equilibrium());
    p = kAustralia;
    p.rho = 0.0;
    EXPECT_FALSE(p.admits_interior_equilibrium());
}

TEST(Period, PrintedCycleLengths) {
    EXPECT_NEAR(period(kAustralia), 13.07, 0.01);
    EXPECT_NEAR(period(kUk), 22.88, 0.01);
    GoodwinParameters harvie = kAustralia;
    harvie.gamma = 62.36;
    EXPECT_NEAR(period(harvie), 1.32, 0.01);
}

TEST(Period, UndefinedForUsCorrected) {
    const GoodwinParameters us{0.0111, 0.0206, 1.7751, -0.0842, -0.0792};
    EXPECT_EQ(code_of([&] { period(us); }), ErrorCode::period_undefined);
}

TEST(FirstIntegral, EquilibriumIsGridMinimum) {
    for (const auto& p : {kAustralia, kUk}) {
        const EquilibriumPoint eq = equilibrium(p);
        const auto grid = testing::grid_minimum_of_first_integral(p, 1e-3);
        const double h_eq = first_integral(eq.state(), p);
        EXPECT_LE(h_eq, grid.h + 1e-12);
        EXPECT_NEAR(grid.u, eq.u_star, 1e-3);
        EXPECT_NEAR(grid.v, eq.v_star, 1e-3);
    }
}

TEST(FirstIntegral, Deterministic) {
    const State s{0.6867, 0.949};
    EXPECT_EQ(first_integral(s, kAustralia) - first_integral(s, kAustralia), 0.0);
}

TEST(FirstIntegral, RejectsNonPositiveState) {
    EXPECT_EQ(code_of([&] { first_integral({0.0, 0.9}, kAustralia); }), ErrorCode::domain);
    EXPECT_EQ(code_of([&] { first_integral({0.9, -0.1}, kAustralia); }), ErrorCode::domain);
}

TEST(FirstIntegral, GradientIsOrthogonalToFlow) {
    // Central differences of H dotted with the vector field vanish to O(h^2).
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(0.2, 1.8);
    for (int trial = 0; trial < 200; ++trial) {
        const GoodwinParameters p = testing::random_parameters(rng);
        const State s{coord(rng), coord(rng)};
        const double h = 1e-5;
        const double dh_du =
            (first_integral({s.u + h, s.v}, p) - first_integral({s.u - h, s.v}, p)) / (2 * h);
        const double dh_dv =
            (first_integral({s.u, s.v + h}, p) - first_integral({s.u, s.v - h}, p)) / (2 * h);
        const Derivative f = vector_field(s, p);
        const double scale = (std::abs(dh_du * f.du) + std::abs(dh_dv * f.dv)) + 1.0;
        EXPECT_NEAR(dh_du * f.du + dh_dv * f.dv, 0.0, 1e-6 * scale) << "trial " << trial;
    }
}

// ---------------------------------------------------------------- properties

TEST(ModelProperties, EquilibriumIsFixedPoint) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 2000; ++trial) {
        const GoodwinParameters p = testing::random_parameters(rng);
        const Derivative d = vector_field(equilibrium(p).state(), p);
        ASSERT_NEAR(d.du, 0.0, 1e-12) << "trial " << trial;
        ASSERT_NEAR(d.dv, 0.0, 1e-12) << "trial " << trial;
    }
}

TEST(ModelProperties, HundredfoldCoefficientsBiasEmploymentDown) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        GoodwinParameters p = testing::random_center_parameters(rng);
        GoodwinParameters inflated = p;
        inflated.gamma *= 100.0;
        inflated.rho *= 100.0;
        ASSERT_LT(equilibrium(inflated).v_star, equilibrium(p).v_star);
        // (alpha + 100 gamma) / (100 rho) = gamma / rho + alpha / (100 rho)
        ASSERT_NEAR(equilibrium(inflated).v_star, p.gamma / p.rho + p.alpha / (100.0 * p.rho),
                    1e-12);
    }
}

TEST(ModelProperties, WageShareIgnoresPhillipsCoefficients) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> coeff(-200.0, 200.0);
    for (int trial = 0; trial < 500; ++trial) {
        const GoodwinParameters p = testing::random_parameters(rng);
        GoodwinParameters q = p;
        q.gamma = coeff(rng);
        q.rho = coeff(rng);
        if (q.rho == 0.0) continue;
        ASSERT_EQ(equilibrium(p).u_star, equilibrium(q).u_star);
    }
}

TEST(ModelProperties, PeriodDependsOnGammaOnlyThroughAlphaPlusGamma) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> shift(-0.01, 0.01);
    std::uniform_real_distribution<double> slope(0.1, 200.0);
    for (int trial = 0; trial < 500; ++trial) {
        const GoodwinParameters p = testing::random_center_parameters(rng);
        GoodwinParameters q = p;
        const double d = shift(rng);
        q.alpha = p.alpha + d;
        q.gamma = p.gamma - d;
        q.beta = p.beta - d;  // keep alpha + beta fixed as well
        q.rho = slope(rng);
        ASSERT_NEAR(period(q), period(p), 1e-12 * period(p));
    }
}

}  // namespace
}  // namespace goodwin
