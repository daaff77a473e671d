#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bias_forge::evalkit {

enum class WinoSplit { T1Pro, T1Anti, T2Pro, T2Anti };

/// "T1-pro", "T1-anti", "T2-pro", "T2-anti".
const char* to_string(WinoSplit split) noexcept;
/// Also accepts the short forms T1-p / T1-a / T2-p / T2-a. Throws ParseError.
WinoSplit split_from_string(const std::string& text);

struct WinoBiasItem {
    std::string item_id;
    std::string sentence;
    std::string pronoun;
    std::string gold_occupation;
    WinoSplit split = WinoSplit::T1Pro;
};

struct GenmoPair {
    std::string pair_id;
    std::string male_story;
    std::string female_story;
};

struct McItem {
    std::string item_id;
    std::string question;
    std::vector<std::string> choices;  // lettered A, B, C, ... in order
    char gold_letter = 'A';
    std::string subject;  // empty when untagged
};

// Loaders pick the format from the extension: ".jsonl" or ".tsv" (header row
// naming the columns). In TSV, MC choices are one column separated by " || ".
// Every loader validates the item invariants and reports the offending row.
std::vector<WinoBiasItem> load_winobias(const std::filesystem::path& path);
std::vector<GenmoPair> load_genmo(const std::filesystem::path& path);
std::vector<McItem> load_mc(const std::filesystem::path& path);

/// Throws Validation unless pronoun and gold occupation both occur in the
/// sentence (case-insensitive).
void validate(const WinoBiasItem& item);
/// Throws Validation unless both stories are non-blank.
void validate(const GenmoPair& pair);
/// Throws Validation unless there are 2..26 choices and the gold letter is
/// one of them.
void validate(const McItem& item);

}  // namespace bias_forge::evalkit
