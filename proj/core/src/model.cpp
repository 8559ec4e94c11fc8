#include "radspec/model.hpp"

#include <stdexcept>

namespace radspec {

DimensionlessProblem dimensionless_from_physical(const PhysicalParams& p) {
    if (p.omega.sign() <= 0) throw std::invalid_argument("omega must be positive");
    if (p.m.sign() <= 0) throw std::invalid_argument("mass must be positive");
    DimensionlessProblem d;
    d.gamma = BigReal(p.l) + p.phi1 / (BigReal(2L) * BigReal::pi());
    d.s = abs(d.gamma);
    d.alpha = p.moment * p.b0 / sqrt(p.m * p.omega);
    return d;
}

EnergyResult energy_from_w(const BigReal& w, const PhysicalParams& p) {
    EnergyResult r;
    r.w = w;
    r.zeta_sq = p.m * p.omega * w;
    r.energy = p.omega * w / BigReal(2L) + p.k * p.k / (BigReal(2L) * p.m);
    return r;
}

BigReal allowed_frequency_n1(const BigReal& s, const BigReal& moment, const BigReal& b0,
                             const BigReal& m) {
    if (s.sign() < 0) throw std::invalid_argument("s must be non-negative");
    if (m.sign() <= 0) throw std::invalid_argument("mass must be positive");
    return moment * moment * b0 * b0 / (BigReal(2L) * m * (BigReal(2L) * s + BigReal(1L)));
}

}  // namespace radspec
