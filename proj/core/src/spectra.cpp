#include "radspec/spectra.hpp"

#include "radspec/rpm.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace radspec {

namespace {

/// Run fn(index) for every index in [0, count) on a small worker pool.
/// Results must be written to preallocated slots, keyed by index.
template <typename F>
void parallel_for(std::size_t count, std::size_t threads, F&& fn) {
    if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

SpectralCurveSet sweep(const BigReal& s, std::vector<BigReal> alpha_grid, std::size_t levels,
                       std::size_t threads) {
    if (levels < 1) throw std::invalid_argument("sweep: levels must be >= 1");
    for (std::size_t g = 1; g < alpha_grid.size(); ++g)
        if (!(alpha_grid[g - 1] < alpha_grid[g]))
            throw std::invalid_argument("sweep: alpha grid must be ascending");

    SpectralCurveSet set;
    set.s = s;
    set.alpha_grid = std::move(alpha_grid);
    const std::size_t points = set.alpha_grid.size();
    set.curves.assign(levels, std::vector<BigReal>(points));
    set.failed.assign(points, false);

    parallel_for(points, threads, [&](std::size_t g) {
        try {
            ConvergedRitz cr = converged_ritz(s, set.alpha_grid[g], std::max<std::size_t>(levels, 4));
            for (std::size_t j = 0; j < levels; ++j) set.curves[j][g] = cr.result.eigenvalues[j];
        } catch (const NumericalError&) {
            set.failed[g] = true;
        }
    });
    return set;
}

std::vector<TruncationPoint> truncation_overlay(const BigReal& s, long n_max,
                                                std::size_t threads) {
    if (n_max < 0) throw std::invalid_argument("truncation_overlay: n_max must be >= 0");
    std::vector<TruncationPoint> points;
    for (long n = 0; n <= n_max; ++n) {
        for (const auto& sol : truncation_solutions(n, s)) {
            TruncationPoint p;
            p.n = n;
            p.i = sol.i;
            p.alpha = sol.alpha_root;
            p.w = sol.w;
            points.push_back(std::move(p));
        }
    }
    parallel_for(points.size(), threads, [&](std::size_t idx) {
        TruncationPoint& p = points[idx];
        const std::size_t level = static_cast<std::size_t>(p.i - 1);
        ConvergedRitz cr = converged_ritz(s, p.alpha, std::max<std::size_t>(level + 1, 4));
        p.residual = abs(cr.result.eigenvalues[level] - p.w);
    });
    return points;
}

BigReal hellmann_feynman_residual(const BigReal& s, const BigReal& alpha, std::size_t level,
                                  double h) {
    if (h <= 0) throw std::invalid_argument("hellmann_feynman_residual: h must be positive");
    const BigReal hb(h);
    const std::size_t levels = std::max<std::size_t>(level + 1, 4);
    BigReal w_plus = converged_ritz(s, alpha + hb, levels).result.eigenvalues[level];
    BigReal w_minus = converged_ritz(s, alpha - hb, levels).result.eigenvalues[level];
    BigReal slope = (w_plus - w_minus) / (BigReal(2L) * hb);
    ConvergedRitz center = converged_ritz(s, alpha, levels);
    return abs(slope + expectation_inv_y(center.result, level));
}

BigReal asymptotic_check(const BigReal& s, std::size_t level, const BigReal& alpha) {
    const BigReal two(2L);
    auto coulomb_level = [&](long j) {
        BigReal q = two * BigReal(j) + two * s + BigReal(1L);
        return -(alpha * alpha) / (q * q);
    };
    const long j = static_cast<long>(level);
    const BigReal target = coulomb_level(j);
    // Window bounded by midpoints to the neighboring Coulomb-like
    // levels, so exactly one root is expected inside.
    BigReal w_hi = (target + coulomb_level(j + 1)) / two;
    BigReal w_lo = level == 0 ? target * BigReal(3L) / two : (target + coulomb_level(j - 1)) / two;

    RpmResult res = rpm_roots(s, alpha, 15, 0, w_lo, w_hi);
    if (res.roots.empty())
        throw NumericalError("asymptotic_check: no RPM root in the expected window");
    // Nearest root to the predicted level.
    BigReal best_w = res.roots.front().w;
    for (const auto& r : res.roots)
        if (abs(r.w - target) < abs(best_w - target)) best_w = r.w;
    return best_w / target;
}

}  // namespace radspec
