#pragma once

#include <string>
#include <vector>

#include "core/jsonl.hpp"
#include "evalkit/genmo.hpp"
#include "evalkit/multiple_choice.hpp"
#include "evalkit/selection.hpp"
#include "evalkit/winobias.hpp"

namespace bias_forge::evalkit {

// JSON reports keep full precision. CSV reports hold display strings:
// percentages with one decimal, GenMO rates with three, rounded half away
// from zero. Absent values are empty CSV cells / JSON null.

Json to_json(const WinoBiasReport& r);
std::string to_csv(const WinoBiasReport& r);

Json to_json(const GenmoReport& r);
std::string to_csv(const GenmoReport& r);

/// `benchmark` is "mmlu" or "truthfulqa".
Json to_json(const McReport& r, const std::string& benchmark);
std::string to_csv(const McReport& r);
std::string subjects_csv(const McReport& r);
McReport mc_report_from_json(const Json& j);
std::string subject_delta_csv(const std::vector<SubjectDelta>& deltas);

/// Reads label, delta1 and delta2 from a WinoBias report. The label falls
/// back to `fallback_label` when the report has none. Throws ParseError.
SelectionCandidate candidate_from_report(const Json& j, const std::string& fallback_label);

/// label,delta1,delta2,delta_sum rows (display-rounded) plus a header.
std::string selection_table(const std::vector<SelectionCandidate>& candidates);

}  // namespace bias_forge::evalkit
