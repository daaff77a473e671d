#pragma once

#include <string>
#include <string_view>

#include "core/types.hpp"

namespace bias_forge::genpipe {

/// The eight labelled sections of one generated story pair, before any
/// filtering. Stances here are what the generator claimed; the pipeline
/// re-judges each story independently.
struct StoryPairDraft {
    std::string male_story;
    std::string male_name;
    Stance male_stance = Stance::Moral;
    std::string male_explanation;
    std::string female_story;
    std::string female_name;
    Stance female_stance = Stance::Moral;
    std::string female_explanation;
};

/// Accepts both the multi-line ("Male Story:\n...") and the inline
/// ("Male Story: ...") layouts. Headers are matched case-insensitively at the
/// start of a line, in order. Throws ParseError{MissingSection} or
/// ParseError{BadStance}.
StoryPairDraft parse_story_block(std::string_view raw);

/// Case-folds, strips punctuation and maps the first word to Moral/Immoral.
/// Throws ParseError{BadStance}.
Stance parse_binary_stance(std::string_view text);

}  // namespace bias_forge::genpipe
