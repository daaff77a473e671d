#pragma once

#include <string>

namespace bias_forge {

/// Round-half-away-from-zero at a fixed number of decimals. Binary noise below
/// 1e-9 of a display unit is absorbed first, so 51.45 rounds to 51.5 even
/// though the nearest double is 51.4499999...
double round_half_away(double value, int decimals);

/// Display string: round_half_away then fixed-point formatting.
std::string format_fixed(double value, int decimals);

/// Full-precision decimal text that round-trips through strtod.
std::string format_full(double value);

}  // namespace bias_forge
