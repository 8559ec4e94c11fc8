#pragma once

#include "radspec/bigreal.hpp"

namespace radspec {

/// Physical inputs of the radial model, in natural units (hbar = c = 1).
struct PhysicalParams {
    BigReal m{1L};       // particle mass, > 0
    BigReal omega{1L};   // oscillator angular frequency, > 0
    BigReal moment{0L};  // magnitude M of the magnetic quadrupole moment
    BigReal b0{0L};      // current-density constant B0
    BigReal k{0L};       // axial wavenumber
    long l = 0;          // angular momentum quantum number
    BigReal phi1{0L};    // geometric quantum phase, arbitrary real
};

/// Dimensionless radial problem: gamma = l + phi1/(2 pi), s = |gamma|,
/// alpha = M B0 / sqrt(m omega).
struct DimensionlessProblem {
    BigReal gamma;
    BigReal s;
    BigReal alpha;
};

struct EnergyResult {
    BigReal w;        // dimensionless eigenvalue
    BigReal zeta_sq;  // m omega W
    BigReal energy;   // omega W / 2 + k^2 / (2 m)
};

DimensionlessProblem dimensionless_from_physical(const PhysicalParams& p);

EnergyResult energy_from_w(const BigReal& w, const PhysicalParams& p);

/// Frequency for which the degree-1 truncation condition holds at the
/// given s: omega = M^2 B0^2 / (2 m (2 s + 1)). The resulting alpha is
/// sqrt(4 s + 2), i.e. the positive degree-1 truncation root. This is a
/// constraint produced by the series truncation, not a physical
/// quantization of the frequency.
BigReal allowed_frequency_n1(const BigReal& s, const BigReal& moment, const BigReal& b0,
                             const BigReal& m);

}  // namespace radspec
