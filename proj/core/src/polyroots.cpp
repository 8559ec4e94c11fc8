#include "radspec/polyroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace radspec {

BigReal poly_eval(const Poly& p, const BigReal& x) {
    BigReal r(0L);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {BigReal(0L)};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = BigReal(static_cast<long>(i)) * p[i];
    return d;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, BigReal(0L));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

namespace {

BigReal max_abs_coeff(const Poly& p) {
    BigReal m(0L);
    for (const auto& c : p) m = max(m, abs(c));
    return m;
}

/// Scale so the largest coefficient has magnitude 1.
Poly normalized(Poly p) {
    BigReal m = max_abs_coeff(p);
    if (m.is_zero()) return p;
    for (auto& c : p) c /= m;
    return p;
}

/// Remainder of a by b (b trimmed, nonconstant leading coefficient).
Poly poly_rem(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        BigReal f = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
    }
    return a;
}

Poly poly_quot(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return {BigReal(0L)};
    Poly q(a.size() - db, BigReal(0L));
    while (a.size() > db) {
        BigReal f = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        q[shift] = f;
        for (std::size_t i = 0; i < db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
    }
    return q;
}

BigReal zero_cutoff() { return pow2(-static_cast<long>(precision_bits()) / 2); }

/// Approximate monic gcd via Euclid; remainders below the cutoff
/// (after normalization) are treated as zero.
Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(normalized(std::move(a)));
    b = poly_trim(normalized(std::move(b)));
    const BigReal cut = zero_cutoff();
    while (b.size() > 1) {
        Poly r = poly_rem(a, b);
        r = poly_trim(std::move(r));
        if (max_abs_coeff(r) < cut) return b;
        a = std::move(b);
        b = normalized(std::move(r));
    }
    return {BigReal(1L)};  // coprime
}

int sign_of(const BigReal& v, const BigReal& cut) {
    if (abs(v) <= cut) return 0;
    return v.sign();
}

struct SturmChain {
    std::vector<Poly> seq;
    BigReal cut;

    int variations(const BigReal& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_of(poly_eval(p, x), cut);
            if (s != 0) {
                if (prev != 0 && s != prev) ++count;
                prev = s;
            }
        }
        return count;
    }
};

SturmChain sturm_chain(const Poly& p) {
    SturmChain c;
    c.cut = pow2(-static_cast<long>(precision_bits()) + 16);
    c.seq.push_back(normalized(p));
    if (p.size() > 1) {
        c.seq.push_back(normalized(poly_derivative(p)));
        while (c.seq.back().size() > 1) {
            Poly r = poly_trim(poly_rem(c.seq[c.seq.size() - 2], c.seq.back()));
            if (max_abs_coeff(r) < zero_cutoff()) break;
            for (auto& v : r) v = -v;
            c.seq.push_back(normalized(std::move(r)));
        }
    }
    return c;
}

void isolate(const SturmChain& chain, const Poly& q, const BigReal& lo, const BigReal& hi,
             int nroots, std::vector<std::pair<BigReal, BigReal>>& out) {
    if (nroots <= 0) return;
    if (nroots == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    BigReal mid = (lo + hi) / BigReal(2L);
    if (poly_eval(q, mid).is_zero()) {
        // Exact hit at the midpoint; nudge by one representable step.
        mid += (hi - lo) * pow2(-static_cast<long>(precision_bits()) + 4);
    }
    int left = chain.variations(lo) - chain.variations(mid);
    isolate(chain, q, lo, mid, left, out);
    isolate(chain, q, mid, hi, nroots - left, out);
}

BigReal bisect(const Poly& q, BigReal lo, BigReal hi) {
    BigReal flo = poly_eval(q, lo);
    if (flo.is_zero()) return lo;
    if (poly_eval(q, hi).is_zero()) return hi;
    const int slo = flo.sign();
    const BigReal rel = pow2(-static_cast<long>(precision_bits()) / 2 - 8);
    const BigReal floor_w = pow2(-3 * static_cast<long>(precision_bits()) / 4);
    while (true) {
        BigReal mid = (lo + hi) / BigReal(2L);
        BigReal width = hi - lo;
        if (width <= max(abs(mid) * rel, floor_w))
            return abs(mid) < floor_w ? BigReal(0L) : mid;
        BigReal fm = poly_eval(q, mid);
        if (fm.is_zero()) return mid;
        if (fm.sign() == slo)
            lo = mid;
        else
            hi = mid;
    }
}

/// Newton refinement after bisection; quadratic convergence takes the
/// bracketed estimate to working precision in a couple of steps.
BigReal polish(const Poly& q, const Poly& dq, BigReal x, const BigReal& lo, const BigReal& hi) {
    for (int it = 0; it < 4; ++it) {
        BigReal f = poly_eval(q, x);
        if (f.is_zero()) return x;
        BigReal df = poly_eval(dq, x);
        if (df.is_zero()) return x;
        BigReal step = f / df;
        BigReal next = x - step;
        if (next < lo || next > hi) return x;
        if (abs(step) <= abs(x) * pow2(-static_cast<long>(precision_bits()))) return next;
        x = next;
    }
    return x;
}

}  // namespace

Poly poly_trim(Poly p) {
    BigReal m = max_abs_coeff(p);
    const BigReal cut = m * pow2(-static_cast<long>(precision_bits()) + 16);
    while (p.size() > 1 && abs(p.back()) <= cut) p.pop_back();
    return p;
}

BigReal cauchy_root_bound(const Poly& p) {
    Poly q = poly_trim(p);
    BigReal m(0L);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) m = max(m, abs(q[i] / q.back()));
    return m + BigReal(1L);
}

std::vector<RealRoot> poly_real_roots(const Poly& p_in, const BigReal& lo, const BigReal& hi) {
    Poly p = poly_trim(p_in);
    if (p.size() <= 1) throw std::invalid_argument("poly_real_roots: constant polynomial");
    if (!(lo < hi)) throw std::invalid_argument("poly_real_roots: empty interval");

    // Square-free part carries each root exactly once.
    Poly g = poly_gcd(p, poly_derivative(p));
    Poly q = g.size() > 1 ? poly_trim(poly_quot(normalized(p), g)) : normalized(p);

    SturmChain chain = sturm_chain(q);
    int total = chain.variations(lo) - chain.variations(hi);
    std::vector<std::pair<BigReal, BigReal>> brackets;
    isolate(chain, q, lo, hi, total, brackets);

    const Poly dq = poly_derivative(q);
    std::vector<RealRoot> roots;
    for (auto& [a, b] : brackets) {
        RealRoot r;
        BigReal x = bisect(q, a, b);
        BigReal slack = b - a;
        r.x = polish(q, dq, std::move(x), a - slack, b + slack);
        roots.push_back(std::move(r));
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.x < b.x; });

    if (g.size() > 1) {
        // Multiple roots exist somewhere; count vanishing derivatives.
        const BigReal scale = max_abs_coeff(p);
        const BigReal cut = scale * pow2(-static_cast<long>(precision_bits()) / 4);
        for (auto& r : roots) {
            Poly d = p;
            int mult = 0;
            while (d.size() > 1 && abs(poly_eval(d, r.x)) <= cut) {
                ++mult;
                d = poly_derivative(d);
            }
            r.multiplicity = std::max(mult, 1);
        }
    }
    return roots;
}

}  // namespace radspec
