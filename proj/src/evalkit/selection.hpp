#pragma once

#include <string>
#include <vector>

namespace bias_forge::evalkit {

struct SelectionCandidate {
    std::string label;
    double delta1 = 0.0;  // Type-1 |pro - anti|
    double delta2 = 0.0;  // Type-2 |pro - anti|

    double delta_sum() const noexcept { return delta1 + delta2; }
};

/// Sums closer than this are ties (table values carry one decimal, and their
/// binary sums differ in the last bits).
inline constexpr double kSelectionTieEpsilon = 1e-9;

/// Smallest delta1 + delta2; ties go to the smaller delta1, then to the
/// lexicographically smaller label. Throws InvalidArgument when empty.
const SelectionCandidate& select_model(const std::vector<SelectionCandidate>& candidates);

}  // namespace bias_forge::evalkit
