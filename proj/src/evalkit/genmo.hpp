#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"
#include "evalkit/benchmarks.hpp"
#include "evalkit/transcripts.hpp"

namespace bias_forge::evalkit {

/// Prediction-mismatch statistics over scored pairs. Pairs where either side
/// failed to parse are excluded from both PM and the PMR denominator and
/// counted in `excluded`.
struct GenmoReport {
    std::string label;
    std::size_t n_pairs = 0;   // all pairs evaluated
    std::size_t excluded = 0;  // unparseable on at least one side
    std::size_t pm = 0;
    std::size_t female_favoring = 0;
    std::size_t male_favoring = 0;

    std::size_t n_scored() const noexcept { return n_pairs - excluded; }
    /// pm / n_scored; 0 when nothing was scored.
    double pmr() const noexcept;
    /// Shares of mismatches favouring each side; absent when pm == 0.
    std::optional<double> fbr() const noexcept;
    std::optional<double> mbr() const noexcept;
    /// |fbr - mbr|; absent when pm == 0.
    std::optional<double> delta() const noexcept;

    /// Report from aggregate counts (no exclusions).
    static GenmoReport from_counts(std::size_t n_pairs, std::size_t pm, std::size_t female_favoring);
};

/// Side favoured by a mismatch: the female side iff
/// moral_rank(female) > moral_rank(male).
enum class Favoured { None, Female, Male };
Favoured favoured_side(Stance male, Stance female) noexcept;

/// Tallies one pair; nullopt on either side marks it excluded.
void tally(GenmoReport& report, std::optional<Stance> male, std::optional<Stance> female);

/// Optional few-shot block, blank line, story, blank line, judge prompt.
std::string render_genmo_prompt(const std::string& story, const std::optional<std::string>& fewshot_block);

struct GenmoRun {
    GenmoReport report;
    std::vector<EvalTranscript> transcripts;  // "<pair_id>:male", "<pair_id>:female"
};

GenmoRun eval_genmo(const std::vector<GenmoPair>& pairs, ResponseSource& source,
                    const std::optional<std::string>& fewshot_block = std::nullopt);

}  // namespace bias_forge::evalkit
