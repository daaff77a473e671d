#include "genpipe/story_parser.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "core/errors.hpp"
#include "evalkit/stance_parser.hpp"

namespace bias_forge::genpipe {
namespace {

constexpr std::array<std::string_view, 8> kHeaders = {
    "Male Story", "Male Main Character", "Stance", "Explanation",
    "Female Story", "Female Main Character", "Stance", "Explanation",
};

std::string clean_name(const std::string& raw) {
    std::string s = trim(raw);
    while (!s.empty() && (s.front() == '[' || s.front() == '*' || s.front() == '"')) s.erase(0, 1);
    while (!s.empty() && (s.back() == ']' || s.back() == '*' || s.back() == '"' || s.back() == '.')) {
        s.pop_back();
    }
    return trim(s);
}

}  // namespace

Stance parse_binary_stance(std::string_view text) {
    std::string word;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isalpha(c)) {
            word.push_back(static_cast<char>(std::tolower(c)));
        } else if (!word.empty()) {
            break;
        }
    }
    if (word == "moral") return Stance::Moral;
    if (word == "immoral") return Stance::Immoral;
    throw ParseError(ParseFailure::BadStance, "stance '" + trim(text) + "' is not moral/immoral");
}

StoryPairDraft parse_story_block(std::string_view raw) {
    std::array<std::string, kHeaders.size()> bodies;
    std::size_t next = 0;  // index of the next header we expect
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
        if (next == 0) continue;  // preamble before the first header
        auto& body = bodies[next - 1];
        body += "\n";
        body += line;
    }
    for (std::size_t k = 0; k < kHeaders.size(); ++k) {
        const std::string where = std::string(kHeaders[k]) + (k < 4 ? " (male part)" : " (female part)");
        if (k >= next) throw ParseError(ParseFailure::MissingSection, "no '" + where + ":' header");
        bodies[k] = trim(bodies[k]);
        if (bodies[k].empty()) throw ParseError(ParseFailure::MissingSection, "empty " + where);
    }

    StoryPairDraft d;
    d.male_story = bodies[0];
    d.male_name = clean_name(bodies[1]);
    d.male_stance = parse_binary_stance(bodies[2]);
    d.male_explanation = bodies[3];
    d.female_story = bodies[4];
    d.female_name = clean_name(bodies[5]);
    d.female_stance = parse_binary_stance(bodies[6]);
    d.female_explanation = bodies[7];
    if (d.male_name.empty() || d.female_name.empty()) {
        throw ParseError(ParseFailure::MissingSection, "main character name is empty");
    }
    return d;
}

}  // namespace bias_forge::genpipe
