#pragma once

#include "radspec/bigreal.hpp"
#include "radspec/linalg.hpp"

#include <vector>

namespace radspec {

/// Taylor coefficients of the regularized logarithmic derivative
/// v = -g'/g with f = y^s g. The Riccati form of the radial equation,
///   v' = v^2 - (2s+1) v / y + alpha / y - y^2 + W,
/// gives v_0 = alpha/(2s+1) and
///   (j + 2s + 1) v_j = sum_{k<j} v_k v_{j-1-k} + W [j=1] - [j=3].
struct RiccatiSeries {
    BigReal s;
    BigReal alpha;
    BigReal w;
    std::vector<BigReal> coeffs;  // v_0 .. v_jmax
};

RiccatiSeries riccati_series(const BigReal& s, const BigReal& alpha, const BigReal& w, long jmax);

/// Determinant of the D x D Hankel matrix M_pq = v_{p+q+d+2}.
/// Requires the series to hold at least 2D + d + 1 coefficients past v_0.
LogDet hankel_logdet(const RiccatiSeries& series, std::size_t dim, std::size_t offset);

struct RpmRoot {
    BigReal w;
    BigReal stability_error;  // |W(D) - W(D-1)| for the matched root
    bool exact = false;       // determinant vanishes identically (truncation case)
};

struct RpmResult {
    std::size_t dim = 0;     // Hankel dimension D
    std::size_t offset = 0;  // d
    std::vector<RpmRoot> roots;  // ascending in W
};

/// Roots in W of the dimension-D Hankel determinant inside the window.
/// A sign scan over `grid_points` samples is refined by recursing into
/// local minima of log|det|, which is what locates the near-degenerate
/// root pairs straddling each eigenvalue. Truncation eigenvalues
/// W = 2(n+s+1), where the determinant vanishes identically, are
/// detected separately and reported as exact roots. stability_error is
/// the distance to the nearest dimension D-1 root.
RpmResult rpm_roots(const BigReal& s, const BigReal& alpha, std::size_t dim, std::size_t offset,
                    const BigReal& w_lo, const BigReal& w_hi, std::size_t grid_points = 400);

/// rpm_roots for every dimension in [d_min, d_max], scanning each
/// determinant once and reusing it as the next dimension's reference.
std::vector<RpmResult> rpm_table(const BigReal& s, const BigReal& alpha, std::size_t d_min,
                                 std::size_t d_max, std::size_t offset, const BigReal& w_lo,
                                 const BigReal& w_hi, std::size_t grid_points = 400);

/// Roots of the dimension-d_max determinant matched against dimensions
/// d_max - 1 and d_max - 2 by nearest neighbor; only roots whose step to
/// the closest match is below `stable_tol` (plus the exact truncation
/// roots) are returned. This filters the spurious roots low-D Hankel
/// determinants produce. Two reference dimensions guard against one of
/// them resolving a tight root pair less sharply than the other.
std::vector<RpmRoot> rpm_converged(const BigReal& s, const BigReal& alpha, std::size_t d_max,
                                   std::size_t offset, const BigReal& w_lo, const BigReal& w_hi,
                                   double stable_tol = 1e-9, std::size_t grid_points = 400);

}  // namespace radspec
