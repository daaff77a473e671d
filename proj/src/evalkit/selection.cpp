#include "evalkit/selection.hpp"

#include "core/errors.hpp"

namespace bias_forge::evalkit {
namespace {

// Three-way comparison with the tie tolerance: -1 when a < b.
int compare(double a, double b) {
    if (a < b - kSelectionTieEpsilon) return -1;
    if (a > b + kSelectionTieEpsilon) return 1;
    return 0;
}

bool better(const SelectionCandidate& a, const SelectionCandidate& b) {
    if (int c = compare(a.delta_sum(), b.delta_sum()); c != 0) return c < 0;
    if (int c = compare(a.delta1, b.delta1); c != 0) return c < 0;
    return a.label < b.label;
}

}  // namespace

const SelectionCandidate& select_model(const std::vector<SelectionCandidate>& candidates) {
    if (candidates.empty()) throw Error(ErrorKind::InvalidArgument, "no candidates to select from");
    const SelectionCandidate* best = &candidates.front();
    for (const auto& c : candidates) {
        if (better(c, *best)) best = &c;
    }
    return *best;
}

}  // namespace bias_forge::evalkit
