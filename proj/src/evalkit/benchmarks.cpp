#include "evalkit/benchmarks.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"
#include "core/jsonl.hpp"
#include "core/types.hpp"
#include "textsim/rouge.hpp"

namespace bias_forge::evalkit {
namespace {

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + sep.size();
    }
    return parts;
}

bool has_extension(const std::filesystem::path& p, const char* ext) {
    return to_lower_ascii(p.extension().string()) == ext;
}

// Rows as JSON objects. TSV cells become strings; the "choices" column is
// split into an array.
std::vector<Json> read_rows(const std::filesystem::path& path) {
    if (has_extension(path, ".jsonl")) return read_jsonl(path);
    if (!has_extension(path, ".tsv")) {
        throw Error(ErrorKind::InvalidArgument, path.string() + ": expected a .jsonl or .tsv file");
    }
    std::istringstream in(read_text_file(path));
    std::string line;
    std::vector<std::string> header;
    std::vector<Json> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_on(line, "\t");
        if (header.empty()) {
            header = std::move(cells);
            continue;
        }
        if (cells.size() != header.size()) {
            throw ParseError(ParseFailure::Malformed, path.string() + ":" + std::to_string(lineno) +
                                                          ": expected " + std::to_string(header.size()) +
                                                          " columns");
        }
        Json row = Json::object();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (header[c] == "choices") {
                Json arr = Json::array();
                for (auto& ch : split_on(cells[c], " || ")) arr.push_back(trim(ch));
                row[header[c]] = std::move(arr);
            } else {
                row[header[c]] = cells[c];
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string optional_id(const Json& row, const char* field, const std::string& fallback) {
    auto it = row.find(field);
    if (it == row.end() || it->is_null()) return fallback;
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return std::to_string(it->get<long long>());
    throw ParseError(ParseFailure::Malformed, std::string("field '") + field + "' must be text or integer");
}

bool contains_ci(const std::string& haystack, const std::string& needle) {
    return to_lower_ascii(haystack).find(to_lower_ascii(needle)) != std::string::npos;
}

template <typename T, typename Fn>
std::vector<T> load_rows(const std::filesystem::path& path, Fn make) {
    std::vector<T> items;
    std::size_t n = 0;
    for (const auto& row : read_rows(path)) {
        ++n;
        try {
            items.push_back(make(row, n));
            validate(items.back());
        } catch (const ParseError& e) {
            throw ParseError(e.failure(), path.string() + " row " + std::to_string(n) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(e.kind(), path.string() + " row " + std::to_string(n) + ": " + e.what());
        }
    }
    if (items.empty()) throw Error(ErrorKind::Validation, path.string() + ": no items");
    return items;
}

}  // namespace

const char* to_string(WinoSplit split) noexcept {
    switch (split) {
        case WinoSplit::T1Pro: return "T1-pro";
        case WinoSplit::T1Anti: return "T1-anti";
        case WinoSplit::T2Pro: return "T2-pro";
        case WinoSplit::T2Anti: return "T2-anti";
    }
    return "";
}

WinoSplit split_from_string(const std::string& text) {
    const std::string t = to_lower_ascii(trim(text));
    if (t == "t1-pro" || t == "t1-p") return WinoSplit::T1Pro;
    if (t == "t1-anti" || t == "t1-a") return WinoSplit::T1Anti;
    if (t == "t2-pro" || t == "t2-p") return WinoSplit::T2Pro;
    if (t == "t2-anti" || t == "t2-a") return WinoSplit::T2Anti;
    throw ParseError(ParseFailure::Malformed, "unknown WinoBias split '" + text + "'");
}

void validate(const WinoBiasItem& item) {
    const auto tokens = textsim::tokenize(item.sentence);
    const auto pron = textsim::tokenize(item.pronoun);
    if (pron.size() != 1 || std::find(tokens.begin(), tokens.end(), pron[0]) == tokens.end()) {
        throw Error(ErrorKind::Validation, "pronoun '" + item.pronoun + "' does not occur in the sentence");
    }
    std::string gold = trim(item.gold_occupation);
    if (to_lower_ascii(gold).rfind("the ", 0) == 0) gold = trim(gold.substr(4));
    if (gold.empty() || !contains_ci(item.sentence, gold)) {
        throw Error(ErrorKind::Validation,
                    "gold occupation '" + item.gold_occupation + "' does not occur in the sentence");
    }
}

void validate(const GenmoPair& pair) {
    if (trim(pair.male_story).empty() || trim(pair.female_story).empty()) {
        throw Error(ErrorKind::Validation, "GenMO pair " + pair.pair_id + " has an empty story");
    }
}

void validate(const McItem& item) {
    if (item.choices.size() < 2 || item.choices.size() > 26) {
        throw Error(ErrorKind::Validation, "multiple-choice item needs 2..26 choices");
    }
    const char last = static_cast<char>('A' + item.choices.size() - 1);
    if (item.gold_letter < 'A' || item.gold_letter > last) {
        throw Error(ErrorKind::Validation, std::string("gold letter '") + item.gold_letter +
                                               "' is not among the choices");
    }
}

std::vector<WinoBiasItem> load_winobias(const std::filesystem::path& path) {
    return load_rows<WinoBiasItem>(path, [](const Json& row, std::size_t n) {
        WinoBiasItem item;
        item.item_id = optional_id(row, "id", "wb-" + std::to_string(n));
        item.sentence = require_string(row, "sentence");
        item.pronoun = require_string(row, "pronoun");
        item.gold_occupation = require_string(row, "gold_occupation");
        item.split = split_from_string(require_string(row, "split"));
        return item;
    });
}

std::vector<GenmoPair> load_genmo(const std::filesystem::path& path) {
    return load_rows<GenmoPair>(path, [](const Json& row, std::size_t n) {
        GenmoPair p;
        p.pair_id = optional_id(row, "pair_id", std::to_string(n - 1));
        p.male_story = require_string(row, "male_story");
        p.female_story = require_string(row, "female_story");
        return p;
    });
}

std::vector<McItem> load_mc(const std::filesystem::path& path) {
    return load_rows<McItem>(path, [](const Json& row, std::size_t n) {
        McItem item;
        item.item_id = optional_id(row, "id", "mc-" + std::to_string(n));
        item.question = require_string(row, "question");
        auto ch = row.find("choices");
        if (ch == row.end() || !ch->is_array()) {
            throw ParseError(ParseFailure::MissingSection, "array field 'choices'");
        }
        for (const auto& c : *ch) {
            if (!c.is_string()) throw ParseError(ParseFailure::Malformed, "choices must be text");
            item.choices.push_back(c.get<std::string>());
        }
        const std::string gold = trim(require_string(row, "gold_letter"));
        if (gold.size() != 1) throw ParseError(ParseFailure::Malformed, "gold_letter must be one letter");
        item.gold_letter = static_cast<char>(std::toupper(static_cast<unsigned char>(gold[0])));
        auto subj = row.find("subject");
        if (subj != row.end() && subj->is_string()) item.subject = subj->get<std::string>();
        return item;
    });
}

}  // namespace bias_forge::evalkit
