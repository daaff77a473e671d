#include "genpipe/steps.hpp"

#include <array>
#include <sstream>

#include "core/errors.hpp"
#include "evalkit/stance_parser.hpp"
#include "textsim/rouge.hpp"

namespace bias_forge::genpipe {

std::string render_judge_prompt(std::string_view story, std::string_view judge_prompt) {
    std::string prompt(story);
    prompt += "\n\n";
    prompt += judge_prompt;
    return prompt;
}

Judgment judge_story(std::string_view story, gateway::ChatBackend& backend,
                     std::string_view judge_prompt, const CallSettings& settings) {
    if (trim(story).empty()) throw Error(ErrorKind::InvalidArgument, "story to judge is empty");
    const auto request = gateway::user_request(render_judge_prompt(story, judge_prompt),
                                               settings.temperature, settings.max_tokens);
    return evalkit::parse_judgment(backend.complete(request));
}

std::string render_neutralize_prompt(std::string_view neutralize_template, const StoryPair& pair,
                                     const Judgment& male, const Judgment& female) {
    return fill_template(neutralize_template,
                         {
                             {"male_story", pair.male_story},
                             {"male_character", pair.male_name},
                             {"male_stance", std::string(to_string(male.stance))},
                             {"male_explanation", male.explanation},
                             {"female_story", pair.female_story},
                             {"female_character", pair.female_name},
                             {"female_stance", std::string(to_string(female.stance))},
                             {"female_explanation", female.explanation},
                         });
}

NeutralPair parse_neutral_response(std::string_view raw) {
    std::array<std::string, 2> bodies;
    constexpr std::array<std::string_view, 2> kHeaders = {"Updated Male Explanation",
                                                          "Updated Female Explanation"};
    std::size_t next = 0;
    std::istringstream in{std::string(raw)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (next < kHeaders.size()) {
            if (auto rest = evalkit::match_header(line, kHeaders[next])) {
                bodies[next++] = *rest;
                continue;
            }
        }
        if (next == 0) continue;
        bodies[next - 1] += "\n" + line;
    }
    for (std::size_t k = 0; k < kHeaders.size(); ++k) {
        if (k >= next) {
            throw ParseError(ParseFailure::MissingSection, "no '" + std::string(kHeaders[k]) + ":' section");
        }
        bodies[k] = trim(bodies[k]);
        if (bodies[k].empty()) {
            throw ParseError(ParseFailure::MissingSection, "empty '" + std::string(kHeaders[k]) + "' section");
        }
    }
    NeutralPair out;
    out.male.explanation = bodies[0];
    out.female.explanation = bodies[1];
    out.pronoun_hits = count_gendered_pronouns(bodies[0]) + count_gendered_pronouns(bodies[1]);
    return out;
}

NeutralPair neutralize(const StoryPair& pair, const Judgment& male, const Judgment& female,
                       gateway::ChatBackend& backend, std::string_view neutralize_template,
                       const CallSettings& settings) {
    if (male.stance == female.stance) {
        throw Error(ErrorKind::InvalidArgument, "neutralize needs divergent stances");
    }
    const auto request = gateway::user_request(
        render_neutralize_prompt(neutralize_template, pair, male, female), settings.temperature,
        settings.max_tokens);
    return parse_neutral_response(backend.complete(request));
}

std::size_t count_gendered_pronouns(std::string_view text) {
    static constexpr std::array<std::string_view, 8> kPronouns = {
        "he", "him", "his", "himself", "she", "her", "hers", "herself"};
    std::size_t hits = 0;
    for (const auto& tok : textsim::tokenize(text)) {
        for (auto p : kPronouns) {
            if (tok == p) ++hits;
        }
    }
    return hits;
}

}  // namespace bias_forge::genpipe
