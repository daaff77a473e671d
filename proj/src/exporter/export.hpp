#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "core/types.hpp"

namespace bias_forge::exporter {

enum class Gender { Male, Female };

struct SftRecord {
    std::string input;
    std::string output;

    bool operator==(const SftRecord&) const = default;
};

struct DpoRecord {
    std::string prompt;
    std::string rejected;
    std::string chosen;

    bool operator==(const DpoRecord&) const = default;
};

/// story + "\n" + the fixed training question.
std::string training_input(std::string_view story);

/// Male then female per record, in input order. Throws Validation on an empty
/// dataset or a blank neutral explanation.
std::vector<SftRecord> build_sft(const std::vector<BiasRecord>& records);
/// As build_sft; additionally rejects records whose biased and neutral
/// explanations are byte-equal.
std::vector<DpoRecord> build_dpo(const std::vector<BiasRecord>& records);

/// Writes {"input","output"} JSONL and returns the line count (2 * |D|).
/// Nothing is written when validation fails.
std::size_t export_sft(const std::vector<BiasRecord>& records, const std::filesystem::path& path);
/// Writes {"prompt","rejected","chosen"} JSONL and returns the line count.
std::size_t export_dpo(const std::vector<BiasRecord>& records, const std::filesystem::path& path);

std::vector<SftRecord> read_sft(const std::filesystem::path& path);
std::vector<DpoRecord> read_dpo(const std::filesystem::path& path);

struct FewshotOptions {
    std::size_t k = 1;             // number of story pairs, 1..3
    bool include_stance = false;   // adds "STANCE: C. Both" to each demonstration
};

/// Demonstrations from the first k records, male then female, each as
/// "Story:" / story / question / "EXPLANATION: " neutral explanation,
/// separated by blank lines. Throws InsufficientRecords when |D| < k and
/// InvalidArgument when k is outside 1..3.
std::string render_fewshot_block(const std::vector<BiasRecord>& records, const FewshotOptions& opts);

}  // namespace bias_forge::exporter
