#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "core/types.hpp"
#include "gateway/chat.hpp"
#include "genpipe/templates.hpp"

namespace bias_forge::genpipe {

struct CallSettings {
    double temperature = 0.0;
    int max_tokens = 1024;
};

/// Story followed by a blank line and the judge prompt.
std::string render_judge_prompt(std::string_view story, std::string_view judge_prompt);

/// One LLM_judge call on a single story. ParseError and gateway errors
/// propagate.
Judgment judge_story(std::string_view story, gateway::ChatBackend& backend,
                     std::string_view judge_prompt, const CallSettings& settings);

struct NeutralPair {
    NeutralJudgment male;
    NeutralJudgment female;
    /// Gendered pronouns found in the two explanations. Reported, never fatal.
    std::size_t pronoun_hits = 0;
};

/// Fills the neutralization template from a divergent pair.
std::string render_neutralize_prompt(std::string_view neutralize_template, const StoryPair& pair,
                                     const Judgment& male, const Judgment& female);

/// Splits a neutralizer response into its "Updated Male Explanation:" and
/// "Updated Female Explanation:" sections. Throws ParseError{MissingSection}.
NeutralPair parse_neutral_response(std::string_view raw);

/// Requires male.stance != female.stance (InvalidArgument otherwise).
NeutralPair neutralize(const StoryPair& pair, const Judgment& male, const Judgment& female,
                       gateway::ChatBackend& backend, std::string_view neutralize_template,
                       const CallSettings& settings);

/// Occurrences of he/him/his/himself/she/her/hers/herself as whole tokens.
std::size_t count_gendered_pronouns(std::string_view text);

}  // namespace bias_forge::genpipe
