#pragma once

#include "radspec/bigreal.hpp"

#include <vector>

namespace radspec {

/// Polynomial with coefficients in ascending degree order.
using Poly = std::vector<BigReal>;

BigReal poly_eval(const Poly& p, const BigReal& x);
Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);

/// Drop trailing coefficients that are negligible relative to the largest.
Poly poly_trim(Poly p);

/// 1 + max|c_j/c_deg|; every real root lies in [-bound, bound].
BigReal cauchy_root_bound(const Poly& p);

struct RealRoot {
    BigReal x;
    int multiplicity = 1;
};

/// All real roots of p in [lo, hi], ascending, found by Sturm-sequence
/// isolation on the square-free part followed by bisection. Multiple
/// roots are reported once with their multiplicity.
/// Throws std::invalid_argument for a constant polynomial.
std::vector<RealRoot> poly_real_roots(const Poly& p, const BigReal& lo, const BigReal& hi);

}  // namespace radspec
