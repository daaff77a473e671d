#include "core/rounding.hpp"

#include <cmath>
#include <cstdio>

namespace bias_forge {

double round_half_away(double value, int decimals) {
    if (!std::isfinite(value)) return value;
    const double scale = std::pow(10.0, decimals);
    double scaled = std::abs(value) * scale;
    // snap to the nearest 1e-9 of a display unit before the half-way test
    scaled = std::round(scaled * 1e9) / 1e9;
    const double rounded = std::floor(scaled + 0.5) / scale;
    return std::copysign(rounded, value);
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, round_half_away(value, decimals));
    std::string out(buf);
    if (out.rfind("-0", 0) == 0 && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

std::string format_full(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace bias_forge
