#include "radspec/rpm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radspec {

RiccatiSeries riccati_series(const BigReal& s, const BigReal& alpha, const BigReal& w, long jmax) {
    if (jmax < 3) throw std::invalid_argument("riccati_series: jmax must be >= 3");
    RiccatiSeries out;
    out.s = s;
    out.alpha = alpha;
    out.w = w;
    auto& v = out.coeffs;
    v.resize(static_cast<std::size_t>(jmax) + 1);
    const BigReal two_s_plus_1 = BigReal(2L) * s + BigReal(1L);
    v[0] = alpha / two_s_plus_1;
    for (long j = 1; j <= jmax; ++j) {
        BigReal acc(0L);
        for (long k = 0; k < j; ++k)
            acc += v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(j - 1 - k)];
        if (j == 1) acc += w;
        if (j == 3) acc -= BigReal(1L);
        v[static_cast<std::size_t>(j)] = acc / (BigReal(j) + two_s_plus_1);
    }
    return out;
}

LogDet hankel_logdet(const RiccatiSeries& series, std::size_t dim, std::size_t offset) {
    if (dim < 1) throw std::invalid_argument("hankel_logdet: dimension must be >= 1");
    const std::size_t needed = 2 * dim + offset;
    if (series.coeffs.size() <= needed)
        throw std::invalid_argument("hankel_logdet: series too short for D=" + std::to_string(dim));
    Matrix m(dim, dim);
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q) m(p, q) = series.coeffs[p + q + offset + 2];
    return lu_logdet(std::move(m));
}

namespace {

struct DetSample {
    int sign = 0;
    double log_abs = 0;  // natural log, meaningless when sign == 0
};

DetSample det_at(const BigReal& s, const BigReal& alpha, std::size_t dim, std::size_t offset,
                 const BigReal& w) {
    RiccatiSeries series = riccati_series(s, alpha, w, static_cast<long>(2 * dim + offset) + 1);
    LogDet d = hankel_logdet(series, dim, offset);
    return {d.sign, d.sign == 0 ? 0.0 : d.log_abs.to_double()};
}

/// Scans one interval for determinant roots. Sign changes are bisected.
/// Local minima of log|det| are refined recursively: close root pairs
/// straddle the eigenvalue so tightly that no coarse grid registers a
/// sign change, but the quadratic dip they carve into |det| is visible
/// at any resolution, and it keeps deepening under magnification while
/// a rootless minimum bottoms out.
class RootScanner {
   public:
    RootScanner(const BigReal& s, const BigReal& alpha, std::size_t dim, std::size_t offset)
        : s_(s), alpha_(alpha), dim_(dim), offset_(offset) {}

    std::vector<BigReal> scan(const BigReal& lo, const BigReal& hi, std::size_t samples) {
        raw_.clear();
        pass(lo, hi, samples, 0, 1e300, 0);
        std::sort(raw_.begin(), raw_.end());
        return std::move(raw_);
    }

    int sign_at(const BigReal& w) { return det_at(s_, alpha_, dim_, offset_, w).sign; }

   private:
    static constexpr int kMaxDepth = 14;
    static constexpr int kRefineSamples = 20;
    static constexpr double kDeepenCut = 0.7;  // nats per magnification step

    void pass(const BigReal& lo, const BigReal& hi, std::size_t n, int depth, double entry_min,
              int stalls) {
        const BigReal h = (hi - lo) / BigReal(static_cast<long>(n));
        std::vector<DetSample> smp(n + 1);
        double level_min = 1e300;
        for (std::size_t i = 0; i <= n; ++i) {
            smp[i] = det_at(s_, alpha_, dim_, offset_, lo + h * BigReal(static_cast<long>(i)));
            if (smp[i].sign != 0 && smp[i].log_abs < level_min) level_min = smp[i].log_abs;
        }
        bool found_here = false;
        for (std::size_t i = 1; i <= n; ++i) {
            if (smp[i].sign == 0) {
                push(lo + h * BigReal(static_cast<long>(i)));
                found_here = true;
            } else if (smp[i - 1].sign != 0 && smp[i].sign != smp[i - 1].sign) {
                push(bisect(lo + h * BigReal(static_cast<long>(i - 1)),
                            lo + h * BigReal(static_cast<long>(i)), smp[i - 1].sign));
                found_here = true;
            }
        }
        // A barren minimum stops deepening once magnified. One stalled
        // level is tolerated: when the entry sample already sits closer
        // to a dip center than the refined grid step, the minimum holds
        // still for a level before it resumes falling.
        if (depth > 0 && level_min > entry_min - kDeepenCut) {
            if (!found_here && ++stalls > 1) return;
        } else {
            stalls = 0;
        }
        std::size_t argmin = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (smp[i].sign != 0 && smp[i].log_abs == level_min) argmin = i;
        if (depth >= kMaxDepth) {
            // Still deepening with nothing bisectable: a root pair tighter
            // than the remaining resolution; its dip center stands in.
            if (depth > 0 && !found_here) push(lo + h * BigReal(static_cast<long>(argmin)));
            return;
        }
        for (std::size_t i = 1; i < n; ++i) {
            if (smp[i].sign == 0) continue;
            const bool left_ok = smp[i - 1].sign == 0 || smp[i].log_abs < smp[i - 1].log_abs;
            const bool right_ok = smp[i + 1].sign == 0 || smp[i].log_abs < smp[i + 1].log_abs;
            if (!left_ok || !right_ok) continue;
            BigReal a = lo + h * BigReal(static_cast<long>(i - 1));
            BigReal b = lo + h * BigReal(static_cast<long>(i + 1));
            if (b - a <= width_floor(a)) {
                if (!found_here && i == argmin) push(lo + h * BigReal(static_cast<long>(i)));
                continue;
            }
            pass(a, b, kRefineSamples, depth + 1, smp[i].log_abs, stalls);
        }
    }

    BigReal bisect(BigReal lo, BigReal hi, int sign_lo) {
        const BigReal floor_w = width_floor(lo);
        while (hi - lo > floor_w) {
            BigReal mid = (lo + hi) / BigReal(2L);
            int sm = sign_at(mid);
            if (sm == 0) return mid;
            if (sm == sign_lo)
                lo = std::move(mid);
            else
                hi = std::move(mid);
        }
        return (lo + hi) / BigReal(2L);
    }

    static BigReal width_floor(const BigReal& w) { return max(abs(w), BigReal(1L)) * BigReal(1e-14); }

    void push(BigReal w) {
        for (const auto& r : raw_)
            if (abs(r - w) <= max(abs(w), BigReal(1L)) * BigReal(3e-14)) return;
        raw_.push_back(std::move(w));
    }

    const BigReal& s_;
    const BigReal& alpha_;
    std::size_t dim_;
    std::size_t offset_;
    std::vector<BigReal> raw_;
};

struct RawScan {
    std::vector<BigReal> roots;   // ascending, deduplicated at 3e-14
    std::vector<BigReal> exact;   // truncation eigenvalues with sign-0 determinant
};

RawScan scan_dim(const BigReal& s, const BigReal& alpha, std::size_t dim, std::size_t offset,
                 const BigReal& w_lo, const BigReal& w_hi, std::size_t grid_points) {
    RootScanner scanner(s, alpha, dim, offset);
    RawScan out;
    // Truncation eigenvalues make the determinant vanish identically;
    // probe them before the scan so they are reported exactly.
    for (long m = 0;; ++m) {
        BigReal cand = BigReal(2L) * (BigReal(m) + s + BigReal(1L));
        if (cand > w_hi) break;
        if (cand < w_lo) continue;
        if (scanner.sign_at(cand) == 0) out.exact.push_back(std::move(cand));
    }
    out.roots = scanner.scan(w_lo, w_hi, grid_points);
    return out;
}

BigReal nearest_gap_raw(const BigReal& w, const std::vector<BigReal>& others) {
    BigReal best(-1L);
    for (const auto& o : others) {
        BigReal d = abs(o - w);
        if (best.sign() < 0 || d < best) best = std::move(d);
    }
    return best;
}

/// Collapses near-degenerate root clusters (the straddling pairs around
/// an eigenvalue) to one representative each. When reference roots from
/// lower Hankel dimensions are available the member that recurs across
/// dimensions is kept; it is the converging one, while its partners
/// drift. stability_error is the distance to the closest reference.
std::vector<RpmRoot> cluster_roots(const RawScan& raw, const std::vector<BigReal>& reference,
                                   const BigReal& fallback_error) {
    std::vector<RpmRoot> roots;
    for (const auto& e : raw.exact) {
        RpmRoot r;
        r.w = e;
        r.exact = true;
        r.stability_error = BigReal(0L);
        roots.push_back(std::move(r));
    }
    auto near_exact = [&](const BigReal& w) {
        for (const auto& e : raw.exact)
            if (abs(e - w) <= max(abs(w), BigReal(1L)) * BigReal(1e-8)) return true;
        return false;
    };

    std::size_t i = 0;
    while (i < raw.roots.size()) {
        std::size_t j = i + 1;
        while (j < raw.roots.size() &&
               raw.roots[j] - raw.roots[j - 1] <=
                   max(abs(raw.roots[j]), BigReal(1L)) * BigReal(1e-8))
            ++j;

        BigReal rep = raw.roots[i + (j - i) / 2];
        BigReal err(-1L);
        if (!reference.empty()) {
            for (std::size_t k = i; k < j; ++k) {
                BigReal g = nearest_gap_raw(raw.roots[k], reference);
                if (err.sign() < 0 || g < err) {
                    err = g;
                    rep = raw.roots[k];
                }
            }
        }
        if (!near_exact(rep)) {
            RpmRoot r;
            r.w = std::move(rep);
            r.exact = false;
            r.stability_error = err.sign() < 0 ? fallback_error : err;
            roots.push_back(std::move(r));
        }
        i = j;
    }

    std::sort(roots.begin(), roots.end(),
              [](const RpmRoot& a, const RpmRoot& b) { return a.w < b.w; });
    return roots;
}

}  // namespace

RpmResult rpm_roots(const BigReal& s, const BigReal& alpha, std::size_t dim, std::size_t offset,
                    const BigReal& w_lo, const BigReal& w_hi, std::size_t grid_points) {
    if (!(w_lo < w_hi)) throw std::invalid_argument("rpm_roots: empty window");
    if (grid_points < 100) throw std::invalid_argument("rpm_roots: need at least 100 grid points");
    RawScan cur = scan_dim(s, alpha, dim, offset, w_lo, w_hi, grid_points);
    std::vector<BigReal> reference;
    if (dim >= 2)
        reference = scan_dim(s, alpha, dim - 1, offset, w_lo, w_hi, grid_points).roots;
    RpmResult res;
    res.dim = dim;
    res.offset = offset;
    res.roots = cluster_roots(cur, reference, w_hi - w_lo);
    return res;
}

std::vector<RpmResult> rpm_table(const BigReal& s, const BigReal& alpha, std::size_t d_min,
                                 std::size_t d_max, std::size_t offset, const BigReal& w_lo,
                                 const BigReal& w_hi, std::size_t grid_points) {
    if (!(w_lo < w_hi)) throw std::invalid_argument("rpm_table: empty window");
    if (d_min < 2 || d_min > d_max) throw std::invalid_argument("rpm_table: bad dimension range");
    std::vector<RawScan> scans;
    for (std::size_t dim = d_min - 1; dim <= d_max; ++dim)
        scans.push_back(scan_dim(s, alpha, dim, offset, w_lo, w_hi, grid_points));
    std::vector<RpmResult> table;
    for (std::size_t dim = d_min; dim <= d_max; ++dim) {
        RpmResult res;
        res.dim = dim;
        res.offset = offset;
        res.roots = cluster_roots(scans[dim - (d_min - 1)], scans[dim - d_min].roots, w_hi - w_lo);
        table.push_back(std::move(res));
    }
    return table;
}

std::vector<RpmRoot> rpm_converged(const BigReal& s, const BigReal& alpha, std::size_t d_max,
                                   std::size_t offset, const BigReal& w_lo, const BigReal& w_hi,
                                   double stable_tol, std::size_t grid_points) {
    if (d_max < 3) throw std::invalid_argument("rpm_converged: d_max must be >= 3");
    // The accurate member of each root cluster alternates in quality
    // with dimension parity, so the top dimension is matched against the
    // two below it and the smaller step is taken as the error estimate.
    RawScan cur = scan_dim(s, alpha, d_max, offset, w_lo, w_hi, grid_points);
    std::vector<BigReal> reference = scan_dim(s, alpha, d_max - 1, offset, w_lo, w_hi, grid_points).roots;
    {
        std::vector<BigReal> two_below =
            scan_dim(s, alpha, d_max - 2, offset, w_lo, w_hi, grid_points).roots;
        reference.insert(reference.end(), two_below.begin(), two_below.end());
    }

    std::vector<RpmRoot> clustered = cluster_roots(cur, reference, w_hi - w_lo);
    const BigReal tol(stable_tol);
    std::vector<RpmRoot> stable;
    for (auto& r : clustered)
        if (r.exact || r.stability_error < tol) stable.push_back(r);
    return stable;
}

}  // namespace radspec
