#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evalkit/benchmarks.hpp"
#include "evalkit/transcripts.hpp"

namespace bias_forge::evalkit {

/// Question, lettered choices and the answer instruction.
std::string render_mc_prompt(const McItem& item);

/// The letter after "answer is" (case-insensitive) when it names a choice;
/// otherwise the first standalone capital within A..(A + n_choices - 1);
/// otherwise nullopt.
std::optional<char> parse_answer_letter(std::string_view raw, std::size_t n_choices);

struct McTally {
    std::size_t total = 0;
    std::size_t correct = 0;
    double accuracy() const noexcept;
};

struct McReport {
    std::string label;
    McTally overall;
    std::size_t unparsed = 0;
    std::size_t no_response = 0;
    std::map<std::string, McTally> per_subject;  // only tagged items

    /// Mean of per-subject accuracies; absent without subject tags.
    std::optional<double> macro_subject_accuracy() const;
};

struct McRun {
    McReport report;
    std::vector<EvalTranscript> transcripts;
};

/// Unparseable or missing answers count as incorrect.
McRun eval_mc(const std::vector<McItem>& items, ResponseSource& source);

struct SubjectDelta {
    std::string subject;
    std::optional<double> baseline;   // accuracy in the baseline report
    std::optional<double> candidate;  // accuracy in the compared report
    std::optional<double> delta;      // candidate - baseline, when both exist
};

/// Per-subject accuracy changes across the union of subjects, sorted by name.
std::vector<SubjectDelta> compare_subjects(const McReport& baseline, const McReport& candidate);

}  // namespace bias_forge::evalkit
