#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace bias_forge {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& path);
/// Writes via a sibling temp file and rename, so readers never observe a
/// half-written file.
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// One object per non-blank line. Parse errors carry the 1-based line number.
std::vector<Json> read_jsonl(const std::filesystem::path& path);
std::vector<Json> parse_jsonl(const std::string& text, const std::string& origin);
/// Compact single-line dump, UTF-8 preserved.
std::string dump_line(const Json& j);

/// Typed field access with Parse errors naming the field.
std::string require_string(const Json& obj, const char* field);
double require_number(const Json& obj, const char* field);

}  // namespace bias_forge
