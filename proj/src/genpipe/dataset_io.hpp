#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "core/jsonl.hpp"
#include "core/types.hpp"

namespace bias_forge::genpipe {

/// One dataset line: pair_id, male_story, female_story, male_name,
/// female_name, rouge1_f, male_stance, female_stance, male_explanation,
/// female_explanation, male_neutral_explanation, female_neutral_explanation.
Json record_to_json(const BiasRecord& r);
/// Throws ParseError on missing fields and Validation on broken invariants.
BiasRecord record_from_json(const Json& j);

std::string render_dataset(const std::vector<BiasRecord>& records);
void write_dataset(const std::filesystem::path& path, const std::vector<BiasRecord>& records);
std::vector<BiasRecord> read_dataset(const std::filesystem::path& path);

}  // namespace bias_forge::genpipe
