#pragma once

#include "radspec/bigreal.hpp"
#include "radspec/polyroots.hpp"

#include <vector>

namespace radspec {

/// One exact polynomial solution of the radial equation: at
/// alpha = alpha_root the series factor terminates at degree n and the
/// eigenvalue is W = 2 (n + s + 1).
struct TruncationSolution {
    long n = 0;            // polynomial degree
    int i = 1;             // root index, 1..n+1, alpha ascending
    BigReal alpha_root;
    BigReal w;             // 2 (n + s + 1)
    BigReal nu;            // W - 2 s - 2 = 2 n
    std::vector<BigReal> coeffs;  // a_0 .. a_n, a_0 = 1
    BigReal s;
};

/// Series coefficients a_0..a_jmax of the three-term recurrence
///   a_{j+2} = [-alpha a_{j+1} + (2 j - nu) a_j] / ((j+2)(j+2(s+1))),
/// with nu = W - 2 s - 2, a_{-1} = 0, a_0 = 1.
std::vector<BigReal> recurrence_coeffs(const BigReal& s, const BigReal& alpha, const BigReal& w,
                                       long jmax);

/// a_{n+1} as a polynomial in alpha (coefficients ascending, degree
/// exactly n+1). Alternate coefficients vanish, so the root set is
/// symmetric under alpha -> -alpha.
Poly truncation_alpha_polynomial(long n, const BigReal& s);

/// All n+1 termination points for degree n, alpha ascending.
std::vector<TruncationSolution> truncation_solutions(long n, const BigReal& s);

/// Number of distinct zeros of the polynomial factor in (0, inf);
/// equals i - 1.
int count_nodes(const TruncationSolution& sol);

/// f(y) = y^s (sum_j a_j y^j) exp(-y^2 / 2).
BigReal eval_eigenfunction(const TruncationSolution& sol, const BigReal& y);

/// Residual of the radial equation at y, evaluated with exact
/// derivatives of the ansatz: y^(s-1) e^(-y^2/2) [y P'' + (2s+1-2y^2) P'
/// + (alpha + nu y) P]. Identically zero for a valid solution.
BigReal ode_residual(const TruncationSolution& sol, const BigReal& y);

}  // namespace radspec
