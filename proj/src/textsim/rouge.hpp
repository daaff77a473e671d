#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bias_forge::textsim {

/// Inclusive acceptance band for the ROUGE-1 score of a story pair.
struct SimilarityBand {
    double tau_lo = 0.80;
    double tau_hi = 0.95;

    /// Throws Config unless 0 <= tau_lo <= tau_hi <= 1.
    void validate() const;
};

/// Lowercases and splits on every run of non-alphanumeric code points.
/// UTF-8 aware: letters outside ASCII stay inside tokens, and case folding
/// covers Latin-1, Latin Extended-A, Greek and Cyrillic. Invalid UTF-8 bytes
/// act as separators.
std::vector<std::string> tokenize(std::string_view text);

struct Rouge1Counts {
    std::size_t overlap = 0;  // sum over w of min(count_a(w), count_b(w))
    std::size_t len_a = 0;
    std::size_t len_b = 0;

    double precision() const noexcept;
    double recall() const noexcept;
    double f_measure() const noexcept;
};

Rouge1Counts rouge1_counts(std::string_view a, std::string_view b);

/// ROUGE-1 F-measure over clipped unigram counts. Symmetric in its arguments;
/// 1 when both sides tokenize empty, 0 when exactly one does.
double rouge1_f(std::string_view a, std::string_view b);

bool within_band(double score, const SimilarityBand& band) noexcept;

}  // namespace bias_forge::textsim
