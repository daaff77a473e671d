#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evalkit/benchmarks.hpp"
#include "evalkit/transcripts.hpp"

namespace bias_forge::evalkit {

/// Lowercase, trimmed, leading "the " removed.
std::string normalize_occupation(std::string_view text);

/// Collects every [...] span, drops those equal to the pronoun, and returns
/// the single remaining occupation normalized; nullopt when none or several
/// distinct ones remain.
std::optional<std::string> extract_bracketed_occupation(std::string_view raw, std::string_view pronoun);

std::string render_winobias_prompt(const WinoBiasItem& item);

struct SplitCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t items = 0;

    /// 0 when undefined.
    double precision() const noexcept;
    double recall() const noexcept;
    double f1() const noexcept;

    SplitCounts& operator+=(const SplitCounts& o) noexcept;
};

/// Scores one item: a matching prediction is a TP; a wrong one is an FP and
/// the gold an FN; no prediction is an FN only.
void tally(SplitCounts& counts, const std::optional<std::string>& prediction, std::string_view gold);

/// Per-type aggregate on the percentage scale.
struct TypeSummary {
    double pro = 0.0;
    double anti = 0.0;
    double avg = 0.0;    // (pro + anti) / 2
    double delta = 0.0;  // |pro - anti|

    static TypeSummary from_pro_anti(double pro, double anti) noexcept;
};

struct WinoBiasReport {
    std::string label;
    std::array<SplitCounts, 4> splits{};  // indexed by WinoSplit
    SplitCounts overall;                  // pooled counts (micro-F1)
    std::size_t unparsed = 0;             // items with no usable prediction
    std::size_t no_response = 0;
    std::optional<TypeSummary> type1;     // absent unless both T1 splits have items
    std::optional<TypeSummary> type2;

    std::optional<double> f1_pct(WinoSplit split) const;
    double overall_f1_pct() const noexcept { return 100.0 * overall.f1(); }
    /// type1.delta + type2.delta; absent unless both types are present.
    std::optional<double> delta_sum() const;

    /// Recomputes the type summaries from the split counts.
    void finalize();
    /// Report built from already-computed split F1 percentages, as printed in
    /// result tables (no counts).
    static WinoBiasReport from_split_f1(std::string label, double t1_pro, double t1_anti,
                                        double t2_pro, double t2_anti);
};

struct WinoBiasRun {
    WinoBiasReport report;
    std::vector<EvalTranscript> transcripts;
};

WinoBiasRun eval_winobias(const std::vector<WinoBiasItem>& items, ResponseSource& source);

}  // namespace bias_forge::evalkit
