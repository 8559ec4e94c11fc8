#pragma once

#include "radspec/bigreal.hpp"
#include "radspec/ritz.hpp"
#include "radspec/truncation.hpp"

#include <vector>

namespace radspec {

struct TruncationPoint {
    long n = 0;
    int i = 1;
    BigReal alpha;
    BigReal w;         // 2 (n + s + 1)
    BigReal residual;  // converged Ritz level i-1 at alpha, minus w
};

/// Sampled spectral curves W_j(alpha) from converged Ritz runs, with
/// the truncation eigenvalues overlaid as isolated points.
struct SpectralCurveSet {
    BigReal s;
    std::vector<BigReal> alpha_grid;                // ascending
    std::vector<std::vector<BigReal>> curves;       // curves[j][g] = W_j(alpha_g)
    std::vector<bool> failed;                       // per grid point
    std::vector<TruncationPoint> truncation_points;
};

/// Converged Ritz eigenvalues at every grid point, computed in
/// parallel; results are ordered by grid index regardless of worker
/// scheduling. A failing grid point is flagged and the sweep continues.
SpectralCurveSet sweep(const BigReal& s, std::vector<BigReal> alpha_grid, std::size_t levels,
                       std::size_t threads = 0);

/// For every truncation root with n <= n_max, the converged Ritz value
/// of level i-1 at alpha = alpha_s^(n,i) against W = 2(n+s+1). The
/// residual is the absolute gap, and it is small exactly because each
/// truncation point lies on curve i-1.
std::vector<TruncationPoint> truncation_overlay(const BigReal& s, long n_max,
                                                std::size_t threads = 0);

/// |central-difference dW/dalpha + <1/y>| for the given level, both
/// sides from converged Ritz runs.
BigReal hellmann_feynman_residual(const BigReal& s, const BigReal& alpha, std::size_t level,
                                  double h = 1e-5);

/// W_level(alpha) / [-alpha^2 / (2 level + 2 s + 1)^2], computed with
/// the RPM (the Gaussian basis converges slowly once the Coulomb-like
/// term dominates). Approaches 1 as alpha grows.
BigReal asymptotic_check(const BigReal& s, std::size_t level, const BigReal& alpha);

}  // namespace radspec
