#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/model.hpp"

using namespace radspec;

namespace {

double d(const BigReal& x) { return x.to_double(); }

}  // namespace

TEST_CASE("dimensionless mapping without phase") {
    PhysicalParams p;
    p.l = 0;
    p.m = BigReal(1L);
    p.omega = BigReal(0.5);
    p.moment = BigReal(1L);
    p.b0 = BigReal(1L);
    DimensionlessProblem dp = dimensionless_from_physical(p);
    CHECK(dp.gamma.is_zero());
    CHECK(dp.s.is_zero());
    CHECK(abs(dp.alpha - sqrt(BigReal(2L))) < BigReal(std::string("1e-70")));
}

TEST_CASE("phase shifts the effective angular momentum") {
    PhysicalParams p;
    p.l = -1;
    p.phi1 = BigReal::pi();  // gamma = -1 + 1/2
    DimensionlessProblem dp = dimensionless_from_physical(p);
    CHECK(abs(dp.gamma + BigReal(1L) / BigReal(2L)) < BigReal(std::string("1e-70")));
    CHECK(abs(dp.s - BigReal(1L) / BigReal(2L)) < BigReal(std::string("1e-70")));

    // s is even in gamma: the mirrored phase gives the same s.
    p.l = 0;
    p.phi1 = BigReal::pi();
    DimensionlessProblem dm = dimensionless_from_physical(p);
    CHECK(dm.s == dp.s);
}

TEST_CASE("alpha scales as M B0 / sqrt(m omega)") {
    PhysicalParams p;
    p.moment = BigReal(3L);
    p.b0 = BigReal(-2L);
    p.m = BigReal(4L);
    p.omega = BigReal(9L);
    DimensionlessProblem dp = dimensionless_from_physical(p);
    CHECK(d(dp.alpha) == -1.0);
}

TEST_CASE("mapping rejects non-positive mass or frequency") {
    PhysicalParams p;
    p.omega = BigReal(0L);
    CHECK_THROWS_AS(dimensionless_from_physical(p), std::invalid_argument);
    p.omega = BigReal(1L);
    p.m = BigReal(-1L);
    CHECK_THROWS_AS(dimensionless_from_physical(p), std::invalid_argument);
}

TEST_CASE("energy reassembly from the dimensionless eigenvalue") {
    PhysicalParams p;
    p.m = BigReal(2L);
    p.omega = BigReal(3L);
    p.k = BigReal(4L);
    EnergyResult e = energy_from_w(BigReal(5L), p);
    CHECK(d(e.w) == 5.0);
    CHECK(d(e.zeta_sq) == 30.0);           // m omega W
    CHECK(d(e.energy) == 7.5 + 4.0);       // omega W / 2 + k^2 / (2 m)
}

TEST_CASE("degree-1 frequency constraint closes the loop") {
    // At the constrained frequency the induced alpha is the positive
    // degree-1 truncation root sqrt(4 s + 2).
    for (long num : {0L, 1L, 2L}) {
        BigReal s = BigReal(num) / BigReal(2L);
        BigReal moment(3L), b0(2L), m(5L);
        BigReal omega = allowed_frequency_n1(s, moment, b0, m);
        CHECK(omega.sign() > 0);
        BigReal alpha = moment * b0 / sqrt(m * omega);
        CHECK(abs(alpha - sqrt(BigReal(4L) * s + BigReal(2L))) < BigReal(std::string("1e-70")));
    }
    CHECK_THROWS_AS(allowed_frequency_n1(BigReal(-1L), BigReal(1L), BigReal(1L), BigReal(1L)),
                    std::invalid_argument);
    CHECK_THROWS_AS(allowed_frequency_n1(BigReal(0L), BigReal(1L), BigReal(1L), BigReal(0L)),
                    std::invalid_argument);
}
