#pragma once

#include "radspec/bigreal.hpp"

#include <string>
#include <vector>

namespace radspec {

/// Fixed-notation decimal string with `sig` significant digits,
/// round-half-even, trailing zeros kept: 4 -> "4.000000000",
/// 15.375927... -> "15.37592718" at sig = 10.
std::string format_significant(const BigReal& x, int sig = 10);

/// RFC-4180-style CSV: header first, '.' decimal separator, LF line
/// endings. Throws std::invalid_argument on ragged rows.
std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

}  // namespace radspec
