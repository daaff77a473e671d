#include "evalkit/stance_parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace bias_forge::evalkit {
namespace {

bool is_decoration(char c) { return c == ' ' || c == '\t' || c == '*' || c == '#' || c == '>' || c == '-'; }

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::optional<Stance> letter_stance(std::string_view payload) {
    std::size_t i = 0;
    while (i < payload.size() && (payload[i] == '(' || payload[i] == '[' || payload[i] == '*')) ++i;
    if (i >= payload.size()) return std::nullopt;
    const char c = payload[i];
    if (c < 'A' || c > 'D') return std::nullopt;
    if (i + 1 < payload.size() && std::isalpha(static_cast<unsigned char>(payload[i + 1]))) {
        return std::nullopt;  // a word such as "Both", not an option letter
    }
    static constexpr Stance kByLetter[] = {Stance::Moral, Stance::Immoral, Stance::Both, Stance::CantSay};
    return kByLetter[c - 'A'];
}

// Lowercased words with every non-letter (apostrophes included) removed.
std::vector<std::string> words_of(std::string_view text) {
    std::vector<std::string> words;
    std::string cur;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isalpha(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (ch == '\'' || static_cast<unsigned char>(ch) >= 0x80) {
            continue;  // can't / can’t -> cant
        } else if (!cur.empty()) {
            words.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) words.push_back(cur);
    return words;
}

std::optional<Stance> keyword_at(const std::vector<std::string>& w, std::size_t i) {
    if (w[i] == "moral") return Stance::Moral;
    if (w[i] == "immoral") return Stance::Immoral;
    if (w[i] == "both") return Stance::Both;
    if ((w[i] == "cant" || w[i] == "cannot") && i + 1 < w.size() && w[i + 1] == "say") {
        return Stance::CantSay;
    }
    return std::nullopt;
}

std::optional<Stance> keyword_stance(std::string_view payload) {
    const auto w = words_of(payload);
    if (w.empty()) return std::nullopt;
    if (auto s = keyword_at(w, 0)) return s;
    std::optional<Stance> found;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (auto s = keyword_at(w, i)) {
            if (found && *found != *s) return std::nullopt;  // ambiguous
            found = s;
        }
    }
    return found;
}

struct StanceLine {
    std::size_t index;
    std::string payload;
};

std::optional<StanceLine> find_stance_line(const std::vector<std::string>& lines) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto p = match_header(lines[i], "stance");
        if (!p) continue;
        // "STANCE:" alone on its line; the answer follows on the next one
        for (std::size_t k = i + 1; p->empty() && k < lines.size(); ++k) {
            const std::string next = trim(lines[k]);
            if (next.empty()) continue;
            if (!match_header(next, "explanation")) p = next;
            break;
        }
        return StanceLine{i, *p};
    }
    return std::nullopt;
}

Stance map_payload(const std::string& payload) {
    const std::string p = trim(payload);
    if (auto s = letter_stance(p)) return *s;
    if (auto s = keyword_stance(p)) return *s;
    throw ParseError(ParseFailure::Unmappable, "stance payload '" + p + "'");
}

}  // namespace

std::optional<std::string> match_header(std::string_view line, std::string_view label) {
    std::size_t i = 0;
    while (i < line.size() && is_decoration(line[i])) ++i;
    if (line.size() - i < label.size()) return std::nullopt;
    for (std::size_t k = 0; k < label.size(); ++k) {
        const auto a = static_cast<unsigned char>(line[i + k]);
        const auto b = static_cast<unsigned char>(label[k]);
        if (std::tolower(a) != std::tolower(b)) return std::nullopt;
    }
    i += label.size();
    while (i < line.size() && (line[i] == '*' || line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] != ':') return std::nullopt;
    ++i;
    while (i < line.size() && line[i] == '*') ++i;
    return trim(line.substr(i));
}

Stance parse_stance(std::string_view raw) {
    const auto lines = split_lines(raw);
    const auto stance_line = find_stance_line(lines);
    if (!stance_line) throw ParseError(ParseFailure::NoStanceLine, "response has no STANCE: line");
    return map_payload(stance_line->payload);
}

Judgment parse_judgment(std::string_view raw) {
    const auto lines = split_lines(raw);
    const auto stance_line = find_stance_line(lines);
    if (!stance_line) throw ParseError(ParseFailure::NoStanceLine, "response has no STANCE: line");
    Judgment j;
    j.stance = map_payload(stance_line->payload);

    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i == stance_line->index) continue;
        if (auto first = match_header(lines[i], "explanation")) {
            std::string text = *first;
            for (std::size_t k = i + 1; k < lines.size(); ++k) {
                text += "\n";
                text += lines[k];
            }
            j.explanation = trim(text);
            break;
        }
    }
    if (j.explanation.empty()) {
        throw ParseError(ParseFailure::MissingSection, "response has no EXPLANATION: text");
    }
    return j;
}

}  // namespace bias_forge::evalkit
