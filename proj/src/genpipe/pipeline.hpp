#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/jsonl.hpp"
#include "core/types.hpp"
#include "gateway/chat.hpp"
#include "genpipe/templates.hpp"
#include "textsim/rouge.hpp"

namespace bias_forge::genpipe {

struct PipelineConfig {
    std::size_t target_pairs = 10;  // N
    textsim::SimilarityBand band;
    /// Generation attempts allowed; 0 means 20 * target_pairs.
    std::size_t max_attempts = 0;
    /// Attempts (and neutralizations) in flight at once.
    std::size_t parallelism = 1;
    /// Attempt i sends seed + i with its generation request.
    std::int64_t seed = 0;
    double generation_temperature = 1.0;
    double judge_temperature = 0.0;
    double neutral_temperature = 0.0;
    int max_tokens = 1024;

    std::size_t attempt_budget() const noexcept {
        return max_attempts == 0 ? 20 * target_pairs : max_attempts;
    }
    /// Throws Config on N = 0, parallelism = 0, a bad band or bad sampling values.
    void validate() const;
};

/// The three LLM roles. They may all refer to the same backend object.
struct PipelineBackends {
    gateway::ChatBackend& generator;
    gateway::ChatBackend& judge;
    gateway::ChatBackend& neutralizer;
};

/// Counts per filter stage. Conservation:
///   generated == parse_failed + band_rejected + judged
///   judged == agreed + retained
///   retained == neutralize_failed + records
struct RunStats {
    std::size_t target = 0;
    std::size_t attempt_budget = 0;
    std::size_t generated = 0;
    std::size_t parse_failed = 0;
    std::size_t story_parse_failed = 0;   // part of parse_failed
    std::size_t judge_parse_failed = 0;   // part of parse_failed
    std::size_t judge_non_binary = 0;     // part of parse_failed: Both / Can't say
    std::size_t band_rejected = 0;
    std::size_t judged = 0;
    std::size_t agreed = 0;
    std::size_t retained = 0;             // |D_bias|
    std::size_t neutralize_failed = 0;
    std::size_t records = 0;              // |D|
    std::size_t pronoun_lint_hits = 0;
    bool budget_exhausted = false;

    Json to_json() const;
    static RunStats from_json(const Json& j);
};

struct PipelineResult {
    std::vector<BiasRecord> records;  // ordered by pair_id
    RunStats stats;

    /// Throws BudgetExhausted when the budget ran out before N divergent pairs.
    void throw_if_incomplete() const;
};

/// Generate -> parse -> band filter -> judge both stories -> keep divergent
/// pairs until N are retained or the budget is spent, then neutralize every
/// retained pair. Parse failures are re-drawn; gateway errors abort.
/// Output is identical for any parallelism setting.
PipelineResult run_pipeline(const PipelineConfig& config, const PromptTemplates& templates,
                            const PipelineBackends& backends);

}  // namespace bias_forge::genpipe
