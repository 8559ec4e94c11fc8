#include "radspec/truncation.hpp"

#include <stdexcept>

namespace radspec {

std::vector<BigReal> recurrence_coeffs(const BigReal& s, const BigReal& alpha, const BigReal& w,
                                       long jmax) {
    if (jmax < 0) throw std::invalid_argument("recurrence_coeffs: jmax must be >= 0");
    const BigReal nu = w - BigReal(2L) * s - BigReal(2L);
    std::vector<BigReal> a(static_cast<std::size_t>(jmax) + 1);
    a[0] = BigReal(1L);
    BigReal prev(0L);  // a_{-1}
    for (long j = -1; j + 2 <= jmax; ++j) {
        const BigReal denom = BigReal(j + 2) * (BigReal(j) + BigReal(2L) * (s + BigReal(1L)));
        const BigReal& aj1 = a[static_cast<std::size_t>(j + 1)];
        const BigReal& aj = (j < 0) ? prev : a[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(j + 2)] =
            (-alpha * aj1 + (BigReal(2L * j) - nu) * aj) / denom;
    }
    return a;
}

Poly truncation_alpha_polynomial(long n, const BigReal& s) {
    if (n < 0) throw std::invalid_argument("truncation_alpha_polynomial: n must be >= 0");
    const BigReal nu = BigReal(2L * n);
    // Run the recurrence with each a_j held as a polynomial in alpha.
    Poly prev = {BigReal(0L)};  // a_{-1}
    Poly cur = {BigReal(1L)};   // a_0
    for (long j = -1; j + 2 <= n + 1; ++j) {
        const BigReal denom = BigReal(j + 2) * (BigReal(j) + BigReal(2L) * (s + BigReal(1L)));
        Poly next(cur.size() + 1, BigReal(0L));
        for (std::size_t t = 0; t < cur.size(); ++t) next[t + 1] = -cur[t] / denom;
        const BigReal c = (BigReal(2L * j) - nu) / denom;
        for (std::size_t t = 0; t < prev.size(); ++t) next[t] += c * prev[t];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;  // a_{n+1}(alpha), degree n+1
}

std::vector<TruncationSolution> truncation_solutions(long n, const BigReal& s) {
    if (s.sign() < 0) throw std::invalid_argument("truncation_solutions: s must be >= 0");
    Poly p = truncation_alpha_polynomial(n, s);
    const BigReal bound = cauchy_root_bound(p);
    auto roots = poly_real_roots(p, -bound, bound);
    if (roots.size() != static_cast<std::size_t>(n + 1))
        throw NumericalError("truncation_solutions: expected " + std::to_string(n + 1) +
                             " real roots, found " + std::to_string(roots.size()));
    const BigReal w = BigReal(2L) * (BigReal(n) + s + BigReal(1L));

    std::vector<TruncationSolution> out;
    out.reserve(roots.size());
    int i = 1;
    for (auto& r : roots) {
        TruncationSolution sol;
        sol.n = n;
        sol.i = i++;
        sol.alpha_root = r.x;
        sol.w = w;
        sol.nu = BigReal(2L * n);
        sol.s = s;
        auto a = recurrence_coeffs(s, sol.alpha_root, w, n);
        sol.coeffs.assign(a.begin(), a.end());
        out.push_back(std::move(sol));
    }
    return out;
}

int count_nodes(const TruncationSolution& sol) {
    if (sol.n == 0) return 0;
    Poly h(sol.coeffs.begin(), sol.coeffs.end());
    const BigReal bound = cauchy_root_bound(h);
    auto roots = poly_real_roots(h, BigReal(0L), bound);
    return static_cast<int>(roots.size());  // distinct zeros; multiple roots counted once
}

BigReal eval_eigenfunction(const TruncationSolution& sol, const BigReal& y) {
    if (y.sign() < 0) throw std::invalid_argument("eval_eigenfunction: y must be >= 0");
    Poly h(sol.coeffs.begin(), sol.coeffs.end());
    BigReal radial = poly_eval(h, y) * exp(-(y * y) / BigReal(2L));
    if (y.is_zero()) return sol.s.is_zero() ? radial : BigReal(0L);
    return pow(y, sol.s) * radial;
}

BigReal ode_residual(const TruncationSolution& sol, const BigReal& y) {
    if (y.sign() <= 0) throw std::invalid_argument("ode_residual: y must be > 0");
    Poly h(sol.coeffs.begin(), sol.coeffs.end());
    Poly h1 = poly_derivative(h);
    Poly h2 = poly_derivative(h1);
    const BigReal two(2L);
    BigReal bracket = y * poly_eval(h2, y) +
                      (two * sol.s + BigReal(1L) - two * y * y) * poly_eval(h1, y) +
                      (sol.alpha_root + sol.nu * y) * poly_eval(h, y);
    return pow(y, sol.s - BigReal(1L)) * exp(-(y * y) / BigReal(2L)) * bracket;
}

}  // namespace radspec
