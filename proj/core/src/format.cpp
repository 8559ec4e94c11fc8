#include "radspec/format.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace radspec {

namespace {

int significant_digits(const std::string& fixed) {
    int count = 0;
    bool leading = true;
    for (char c : fixed) {
        if (c < '0' || c > '9') continue;
        if (leading && c == '0') continue;
        leading = false;
        ++count;
    }
    return count;
}

std::string fixed_with_decimals(const BigReal& x, int decimals) {
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*R*f", decimals, MPFR_RNDN, x.raw());
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

}  // namespace

std::string format_significant(const BigReal& x, int sig) {
    if (sig < 1) throw std::invalid_argument("format_significant: sig must be >= 1");
    if (x.is_zero()) {
        std::string s = "0.";
        s.append(static_cast<std::size_t>(sig - 1), '0');
        return s;
    }
    long e = 0;
    {
        // Decimal exponent: floor(log10 |x|).
        BigReal l = log10(abs(x));
        e = static_cast<long>(std::floor(l.to_double()));
    }
    int decimals = sig - 1 - static_cast<int>(e);
    if (decimals < 0) decimals = 0;
    std::string s = fixed_with_decimals(x, decimals);
    // Rounding can carry into a new leading digit (9.99.. -> 10.0..).
    while (decimals > 0 && significant_digits(s) > sig) {
        --decimals;
        s = fixed_with_decimals(x, decimals);
    }
    return s;
}

std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    };
    append_row(header);
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("emit_csv: ragged row");
        append_row(row);
    }
    return out;
}

}  // namespace radspec
