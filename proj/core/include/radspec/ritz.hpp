#pragma once

#include "radspec/bigreal.hpp"
#include "radspec/linalg.hpp"

#include <vector>

namespace radspec {

/// I(p) = integral_0^inf y^p e^(-y^2) dy = Gamma((p+1)/2) / 2.
BigReal moment_integral(const BigReal& p);

/// Gram matrix of the basis u_j = y^(s+j) e^(-y^2/2) under the measure
/// y dy: S_ij = I(2s + i + j + 1).
SymMatrix overlap_matrix(std::size_t n, const BigReal& s);

/// Matrix of 1/y in the same basis: T_ij = I(2s + i + j).
SymMatrix inv_y_matrix(std::size_t n, const BigReal& s);

/// Symmetric quadratic form of the radial operator,
///   H_ij = [(s+i)(s+j) + s^2] I(2s+i+j-1) - alpha I(2s+i+j)
///          - (2s+i+j) I(2s+i+j+1) + 2 I(2s+i+j+3).
/// The first term is skipped when its coefficient vanishes exactly,
/// which is the only way the divergent I(-1) could be reached (s = 0,
/// i = j = 0).
SymMatrix hamiltonian_matrix(std::size_t n, const BigReal& s, const BigReal& alpha);

struct RitzResult {
    std::size_t basis_size = 0;
    BigReal s;
    BigReal alpha;
    std::vector<BigReal> eigenvalues;  // ascending upper bounds
    Matrix eigenvectors;               // column j: basis coefficients of level j
    double gram_condition_log10 = 0.0;
};

/// Generalized eigenproblem H c = W S c via Cholesky congruence and
/// Jacobi diagonalization.
RitzResult ritz_spectrum(const BigReal& s, const BigReal& alpha, std::size_t n);

struct ConvergedRitz {
    RitzResult result;
    bool converged = false;
};

/// Grow the basis one function at a time until the lowest `levels`
/// eigenvalues move by less than `tol` between successive sizes.
ConvergedRitz converged_ritz(const BigReal& s, const BigReal& alpha, std::size_t levels = 4,
                             double tol = 1e-10, std::size_t n_cap = 24);

/// <1/y> for level j, c' T c / c' S c; strictly positive.
BigReal expectation_inv_y(const RitzResult& r, std::size_t j);

struct OracleEntry {
    BigReal overlap;
    BigReal hamiltonian;
};

/// Independent check of the closed-form matrix elements by composite
/// Gauss-Legendre quadrature on [0, 40] (the integrand decays as
/// e^(-y^2); the tail beyond 40 is far below working precision).
/// Relative tolerance 1e-30; throws QuadratureFailure if not reached.
OracleEntry quadrature_oracle(std::size_t i, std::size_t j, const BigReal& s,
                              const BigReal& alpha);

}  // namespace radspec
