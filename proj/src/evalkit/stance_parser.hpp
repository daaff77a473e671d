#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/types.hpp"

namespace bias_forge::evalkit {

/// Finds the first line starting with "STANCE:" (case-insensitive; leading
/// whitespace and markdown emphasis allowed) and maps its payload. A leading
/// option letter A-D wins over keywords; otherwise moral / immoral / both /
/// can't say (also "cant say", "cannot say") are recognised.
/// Throws ParseError{NoStanceLine} or ParseError{Unmappable}.
Stance parse_stance(std::string_view raw);

/// parse_stance plus the text following "EXPLANATION:" (to the end of the
/// response). Throws ParseError{MissingSection} when the explanation is
/// absent or blank.
Judgment parse_judgment(std::string_view raw);

/// If `line` starts with `label` followed by ':' (case-insensitive, ignoring
/// leading whitespace and '*', '#', '>' or '-' decoration), returns the text
/// after the colon. Shared by the labelled-section parsers.
std::optional<std::string> match_header(std::string_view line, std::string_view label);

}  // namespace bias_forge::evalkit
