#include "radspec/ritz.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace radspec {

BigReal moment_integral(const BigReal& p) {
    return tgamma((p + BigReal(1L)) / BigReal(2L)) / BigReal(2L);
}

SymMatrix overlap_matrix(std::size_t n, const BigReal& s) {
    if (n < 1) throw std::invalid_argument("overlap_matrix: basis size must be >= 1");
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m.set(i, j, moment_integral(BigReal(2L) * s + BigReal(static_cast<long>(i + j + 1))));
    return m;
}

SymMatrix inv_y_matrix(std::size_t n, const BigReal& s) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m.set(i, j, moment_integral(BigReal(2L) * s + BigReal(static_cast<long>(i + j))));
    return m;
}

SymMatrix hamiltonian_matrix(std::size_t n, const BigReal& s, const BigReal& alpha) {
    if (n < 1) throw std::invalid_argument("hamiltonian_matrix: basis size must be >= 1");
    SymMatrix m(n);
    const BigReal two(2L);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const BigReal p = two * s + BigReal(static_cast<long>(i + j));
            const BigReal c1 = (s + BigReal(static_cast<long>(i))) * (s + BigReal(static_cast<long>(j))) + s * s;
            BigReal h(0L);
            if (!c1.is_zero()) h += c1 * moment_integral(p - BigReal(1L));
            h -= alpha * moment_integral(p);
            h -= p * moment_integral(p + BigReal(1L));
            h += two * moment_integral(p + BigReal(3L));
            m.set(i, j, std::move(h));
        }
    }
    return m;
}

RitzResult ritz_spectrum(const BigReal& s, const BigReal& alpha, std::size_t n) {
    SymMatrix overlap = overlap_matrix(n, s);
    SymMatrix ham = hamiltonian_matrix(n, s, alpha);
    Matrix l = cholesky(overlap);

    // A = L^-1 H L^-T, assembled column by column.
    Matrix x(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigReal> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = ham(i, j);
        col = solve_lower(l, std::move(col));
        for (std::size_t i = 0; i < n; ++i) x(i, j) = std::move(col[i]);
    }
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigReal> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = x(i, j);
        row = solve_lower(l, std::move(row));
        for (std::size_t j = 0; j <= i; ++j) a.set(i, j, std::move(row[j]));
    }

    EigenResult eig = sym_eigen(a);

    RitzResult r;
    r.basis_size = n;
    r.s = s;
    r.alpha = alpha;
    r.eigenvalues = std::move(eig.values);
    r.eigenvectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigReal> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, j);
        v = solve_lower_transposed(l, std::move(v));
        for (std::size_t i = 0; i < n; ++i) r.eigenvectors(i, j) = std::move(v[i]);
    }

    EigenResult gram = sym_eigen(overlap);
    r.gram_condition_log10 = log10(gram.values.back() / gram.values.front()).to_double();
    return r;
}

ConvergedRitz converged_ritz(const BigReal& s, const BigReal& alpha, std::size_t levels,
                             double tol, std::size_t n_cap) {
    if (levels < 1) throw std::invalid_argument("converged_ritz: levels must be >= 1");
    const BigReal tol_b(tol);
    ConvergedRitz out;
    RitzResult prev;
    for (std::size_t n = std::max<std::size_t>(levels, 2); n <= n_cap; ++n) {
        RitzResult cur = ritz_spectrum(s, alpha, n);
        if (prev.basis_size >= levels) {
            bool settled = true;
            for (std::size_t j = 0; j < levels; ++j)
                if (abs(cur.eigenvalues[j] - prev.eigenvalues[j]) >= tol_b) { settled = false; break; }
            if (settled) {
                out.result = std::move(cur);
                out.converged = true;
                return out;
            }
        }
        prev = std::move(cur);
    }
    out.result = std::move(prev);
    out.converged = false;
    return out;
}

BigReal expectation_inv_y(const RitzResult& r, std::size_t j) {
    if (j >= r.basis_size) throw std::invalid_argument("expectation_inv_y: level out of range");
    const std::size_t n = r.basis_size;
    SymMatrix t = inv_y_matrix(n, r.s);
    SymMatrix overlap = overlap_matrix(n, r.s);
    BigReal num(0L), den(0L);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            BigReal cc = r.eigenvectors(a, j) * r.eigenvectors(b, j);
            num += cc * t(a, b);
            den += cc * overlap(a, b);
        }
    }
    return num / den;
}

namespace {

struct GaussLegendre {
    std::vector<BigReal> nodes;    // on (-1, 1)
    std::vector<BigReal> weights;
};

GaussLegendre compute_gauss_legendre(std::size_t order) {
    GaussLegendre g;
    const BigReal one(1L), two(2L);
    const BigReal eps = pow2(-static_cast<long>(precision_bits()) + 8);
    for (std::size_t k = 1; k <= order; ++k) {
        BigReal x(std::cos(M_PI * (k - 0.25) / (order + 0.5)));
        BigReal dp(0L);
        for (int it = 0; it < 200; ++it) {
            // Legendre recurrence for P_n(x) and P'_n(x).
            BigReal p0(1L), p1 = x;
            for (std::size_t m = 2; m <= order; ++m) {
                BigReal p2 = (BigReal(static_cast<long>(2 * m - 1)) * x * p1 -
                              BigReal(static_cast<long>(m - 1)) * p0) /
                             BigReal(static_cast<long>(m));
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            dp = BigReal(static_cast<long>(order)) * (x * p1 - p0) / (x * x - one);
            BigReal dx = p1 / dp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        g.nodes.push_back(x);
        g.weights.push_back(two / ((one - x * x) * dp * dp));
    }
    return g;
}

const GaussLegendre& gauss_legendre(std::size_t order) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, unsigned>, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(order, precision_bits());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_gauss_legendre(order)).first;
    return it->second;
}

template <typename F>
BigReal integrate_panels(F&& f, const BigReal& a, const BigReal& b, std::size_t panels,
                         const GaussLegendre& g) {
    const BigReal two(2L);
    BigReal total(0L);
    BigReal width = (b - a) / BigReal(static_cast<long>(panels));
    for (std::size_t p = 0; p < panels; ++p) {
        BigReal lo = a + width * BigReal(static_cast<long>(p));
        BigReal mid = lo + width / two;
        BigReal half = width / two;
        BigReal acc(0L);
        for (std::size_t k = 0; k < g.nodes.size(); ++k)
            acc += g.weights[k] * f(mid + half * g.nodes[k]);
        total += acc * half;
    }
    return total;
}

template <typename F>
BigReal adaptive_integral(F&& f, const BigReal& a, const BigReal& b, const BigReal& rel_tol) {
    const GaussLegendre& g = gauss_legendre(32);
    BigReal coarse = integrate_panels(f, a, b, 40, g);
    for (std::size_t panels = 80; panels <= 320; panels *= 2) {
        BigReal fine = integrate_panels(f, a, b, panels, g);
        if (abs(fine - coarse) <= rel_tol * max(abs(fine), BigReal(1L))) return fine;
        coarse = std::move(fine);
    }
    throw QuadratureFailure("quadrature_oracle: tolerance not reached");
}

}  // namespace

OracleEntry quadrature_oracle(std::size_t i, std::size_t j, const BigReal& s,
                              const BigReal& alpha) {
    const BigReal si = s + BigReal(static_cast<long>(i));
    const BigReal sj = s + BigReal(static_cast<long>(j));
    const bool centrifugal = !s.is_zero();

    auto u = [](const BigReal& e, const BigReal& y) { return pow(y, e) * exp(-(y * y) / BigReal(2L)); };

    auto overlap_f = [&](const BigReal& y) { return u(si, y) * u(sj, y) * y; };
    // u' = ((s+i)/y - y) u; the form below is u_i' u_j' y + (s^2/y^2
    // - alpha/y + y^2) u_i u_j y with the centrifugal piece dropped
    // when its coefficient s^2 is exactly zero.
    auto ham_f = [&](const BigReal& y) {
        BigReal ui = u(si, y), uj = u(sj, y);
        BigReal dui = (si / y - y) * ui;
        BigReal duj = (sj / y - y) * uj;
        BigReal val = dui * duj * y + (y * y - alpha / y) * ui * uj * y;
        if (centrifugal) val += (s * s) / (y * y) * ui * uj * y;
        return val;
    };

    const BigReal rel_tol(std::string("1e-30"));
    OracleEntry e;
    e.overlap = adaptive_integral(overlap_f, BigReal(0L), BigReal(40L), rel_tol);
    e.hamiltonian = adaptive_integral(ham_f, BigReal(0L), BigReal(40L), rel_tol);
    return e;
}

}  // namespace radspec
