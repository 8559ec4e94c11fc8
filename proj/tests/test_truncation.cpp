#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/truncation.hpp"

#include <vector>

using namespace radspec;

namespace {

BigReal be(const char* s) { return BigReal(std::string(s)); }

const std::vector<BigReal>& s_values() {
    static std::vector<BigReal> v = {BigReal(0L), BigReal(1L) / BigReal(2L), BigReal(1L)};
    return v;
}

}  // namespace

TEST_CASE("recurrence matches a hand-rolled first few terms") {
    BigReal s(0L), alpha(1L), w(3L);
    auto a = recurrence_coeffs(s, alpha, w, 3);
    // nu = W - 2s - 2 = 1; a_1 = -alpha a_0 / (1 * (2s+1)) ... direct
    // substitution of j = -1, 0, 1 into the three-term recurrence.
    CHECK(a[0] == BigReal(1L));
    CHECK(abs(a[1] + alpha) < be("1e-70"));
    CHECK(abs(a[2] - (-alpha * a[1] - a[0]) / BigReal(4L)) < be("1e-70"));
    CHECK(abs(a[3] - (-alpha * a[2] + a[1]) / BigReal(9L)) < be("1e-70"));
}

TEST_CASE("closed-form termination points for degrees 1 and 2") {
    for (const auto& s : s_values()) {
        auto n1 = truncation_solutions(1, s);
        REQUIRE(n1.size() == 2);
        BigReal r = sqrt(BigReal(4L) * s + BigReal(2L));
        CHECK(abs(n1[0].alpha_root + r) < be("1e-30"));
        CHECK(abs(n1[1].alpha_root - r) < be("1e-30"));

        auto n2 = truncation_solutions(2, s);
        REQUIRE(n2.size() == 3);
        BigReal r2 = BigReal(2L) * sqrt(BigReal(4L) * s + BigReal(3L));
        CHECK(abs(n2[0].alpha_root + r2) < be("1e-30"));
        CHECK(abs(n2[1].alpha_root) < be("1e-30"));
        CHECK(abs(n2[2].alpha_root - r2) < be("1e-30"));
    }
}

TEST_CASE("eigenvalue is exactly 2(n+s+1) and nu is 2n") {
    for (const auto& s : s_values())
        for (long n = 0; n <= 6; ++n)
            for (const auto& sol : truncation_solutions(n, s)) {
                CHECK(sol.w == BigReal(2L) * (BigReal(n) + s + BigReal(1L)));
                CHECK(sol.nu == BigReal(2L * n));
            }
}

TEST_CASE("the series truly terminates at the roots") {
    for (const auto& s : s_values())
        for (long n = 0; n <= 4; ++n)
            for (const auto& sol : truncation_solutions(n, s)) {
                auto a = recurrence_coeffs(s, sol.alpha_root, sol.w, n + 3);
                CHECK(abs(a[static_cast<std::size_t>(n + 1)]) < be("1e-60"));
                CHECK(abs(a[static_cast<std::size_t>(n + 2)]) < be("1e-60"));
            }
}

TEST_CASE("alpha polynomial has pure parity") {
    // Alternate coefficients vanish, so roots come in +/- pairs.
    for (const auto& s : s_values())
        for (long n = 0; n <= 6; ++n) {
            Poly p = truncation_alpha_polynomial(n, s);
            REQUIRE(p.size() == static_cast<std::size_t>(n + 2));
            for (std::size_t t = (n + 1) % 2 ? 0 : 1; t < p.size(); t += 2)
                CHECK(abs(p[t]) < be("1e-70"));
        }
}

TEST_CASE("root index orders solutions by node count") {
    for (const auto& s : s_values())
        for (long n = 0; n <= 6; ++n)
            for (const auto& sol : truncation_solutions(n, s))
                CHECK(count_nodes(sol) == sol.i - 1);
}

TEST_CASE("ODE residual vanishes at the termination points") {
    const std::vector<BigReal> ys = {be("0.3"), BigReal(1L), be("2.7")};
    for (const auto& s : s_values())
        for (long n = 0; n <= 6; ++n)
            for (const auto& sol : truncation_solutions(n, s))
                for (const auto& y : ys)
                    CHECK(abs(ode_residual(sol, y)) < be("1e-60"));
}

TEST_CASE("residual does not vanish off the termination set") {
    auto sols = truncation_solutions(1, BigReal(0L));
    TruncationSolution bad = sols[1];
    bad.alpha_root += be("0.01");  // detune alpha, keep the coefficients
    CHECK(abs(ode_residual(bad, BigReal(1L))) > be("1e-6"));
}

TEST_CASE("eigenfunction boundary behavior") {
    auto sols = truncation_solutions(1, BigReal(1L));
    // s > 0: f(0) = 0; ground solution has no interior nodes.
    CHECK(eval_eigenfunction(sols[0], BigReal(0L)).is_zero());
    CHECK(eval_eigenfunction(sols[0], BigReal(1L)).sign() != 0);

    auto s0 = truncation_solutions(0, BigReal(0L));
    CHECK(eval_eigenfunction(s0[0], BigReal(0L)) == BigReal(1L));  // a_0 = 1
    CHECK_THROWS_AS(eval_eigenfunction(s0[0], BigReal(-1L)), std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(truncation_solutions(-1, BigReal(0L)), std::invalid_argument);
    CHECK_THROWS_AS(truncation_solutions(1, BigReal(-1L)), std::invalid_argument);
    CHECK_THROWS_AS(recurrence_coeffs(BigReal(0L), BigReal(0L), BigReal(0L), -1),
                    std::invalid_argument);
}
