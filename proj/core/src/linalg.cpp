#include "radspec/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace radspec {

Matrix cholesky(const SymMatrix& s) {
    const std::size_t n = s.dim();
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        BigReal d = s(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d.sign() <= 0)
            throw NotPositiveDefinite("cholesky: non-positive pivot at row " + std::to_string(j) +
                                      " (matrix too ill-conditioned for the working precision)");
        l(j, j) = sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            BigReal v = s(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
            l(i, j) = v / l(j, j);
        }
    }
    return l;
}

namespace {

BigReal off_diagonal_max(const Matrix& a) {
    const std::size_t n = a.rows();
    BigReal m(0L);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m = max(m, abs(a(i, j)));
    return m;
}

}  // namespace

EigenResult sym_eigen(const SymMatrix& sym, std::size_t max_sweeps) {
    const std::size_t n = sym.dim();
    Matrix a = sym.dense();
    Matrix v = Matrix::identity(n);
    if (n == 0) return {{}, v};

    BigReal scale(0L);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) scale = max(scale, abs(a(i, j)));
    const BigReal one(1L);
    const BigReal stop = max(scale, BigReal(1L)) * pow2(-static_cast<long>(precision_bits()) + 8);

    std::size_t sweep = 0;
    while (off_diagonal_max(a) > stop) {
        if (++sweep > max_sweeps)
            throw IterationLimit("sym_eigen: Jacobi iteration did not converge");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (abs(a(p, q)) <= stop) continue;
                // Classic Jacobi rotation annihilating a(p,q).
                BigReal theta = (a(q, q) - a(p, p)) / (BigReal(2L) * a(p, q));
                BigReal t = one / (abs(theta) + sqrt(theta * theta + one));
                if (theta.sign() < 0) t = -t;
                BigReal c = one / sqrt(t * t + one);
                BigReal s = t * c;
                BigReal tau = s / (one + c);

                BigReal apq = a(p, q);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = BigReal(0L);
                a(q, p) = BigReal(0L);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        BigReal aip = a(i, p), aiq = a(i, q);
                        a(i, p) = aip - s * (aiq + tau * aip);
                        a(i, q) = aiq + s * (aip - tau * aiq);
                        a(p, i) = a(i, p);
                        a(q, i) = a(i, q);
                    }
                    BigReal vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip - s * (viq + tau * vip);
                    v(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenResult res;
    res.values.reserve(n);
    res.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.values.push_back(a(order[j], order[j]));
        for (std::size_t i = 0; i < n; ++i) res.vectors(i, j) = v(i, order[j]);
    }
    return res;
}

LogDet lu_logdet(Matrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("lu_logdet: matrix must be square");
    LogDet r;
    r.sign = 1;
    r.log_abs = BigReal(0L);
    if (n == 0) return r;

    // Row scales for the pivot choice, and per-entry magnitude bounds
    // that track the largest term ever folded into each entry. Entries
    // of legitimately tiny determinants decay gradually during the
    // elimination; a pivot that falls to roundoff distance below its
    // own accumulated magnitude only happens when the determinant is
    // an exact zero cancelled at working precision.
    std::vector<BigReal> scale(n);
    Matrix bound(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        BigReal s(0L);
        for (std::size_t j = 0; j < n; ++j) {
            bound(i, j) = abs(m(i, j));
            s = max(s, bound(i, j));
        }
        if (s.is_zero()) return {0, BigReal(0L)};
        scale[i] = s;
    }
    const BigReal zero_cut = pow2(-static_cast<long>(precision_bits()) + 32);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        BigReal best = abs(m(k, k)) / scale[k];
        for (std::size_t i = k + 1; i < n; ++i) {
            BigReal c = abs(m(i, k)) / scale[i];
            if (c > best) { best = c; piv = i; }
        }
        if (abs(m(piv, k)) <= bound(piv, k) * zero_cut) return {0, BigReal(0L)};
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(piv, j));
                std::swap(bound(k, j), bound(piv, j));
            }
            std::swap(scale[k], scale[piv]);
            r.sign = -r.sign;
        }
        if (m(k, k).sign() < 0) r.sign = -r.sign;
        r.log_abs += log(abs(m(k, k)));
        for (std::size_t i = k + 1; i < n; ++i) {
            BigReal f = m(i, k) / m(k, k);
            if (f.is_zero()) continue;
            BigReal af = abs(f);
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                bound(i, j) = max(bound(i, j), af * bound(k, j));
            }
        }
    }
    return r;
}

std::vector<BigReal> solve_lower(const Matrix& l, std::vector<BigReal> b) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) b[i] -= l(i, k) * b[k];
        b[i] /= l(i, i);
    }
    return b;
}

std::vector<BigReal> solve_lower_transposed(const Matrix& l, std::vector<BigReal> b) {
    const std::size_t n = l.rows();
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) b[ii] -= l(k, ii) * b[k];
        b[ii] /= l(ii, ii);
    }
    return b;
}

}  // namespace radspec
