#include "genpipe/dataset_io.hpp"

#include "core/errors.hpp"

namespace bias_forge::genpipe {
namespace {

Stance require_stance(const Json& j, const char* field) {
    const auto text = require_string(j, field);
    auto s = stance_from_string(text);
    if (!s) throw ParseError(ParseFailure::BadStance, std::string(field) + " '" + text + "'");
    return *s;
}

}  // namespace

Json record_to_json(const BiasRecord& r) {
    Json j;
    j["pair_id"] = r.pair.pair_id;
    j["male_story"] = r.pair.male_story;
    j["female_story"] = r.pair.female_story;
    j["male_name"] = r.pair.male_name;
    j["female_name"] = r.pair.female_name;
    j["rouge1_f"] = r.pair.rouge1_f;
    j["male_stance"] = std::string(to_string(r.male_judgment.stance));
    j["female_stance"] = std::string(to_string(r.female_judgment.stance));
    j["male_explanation"] = r.male_judgment.explanation;
    j["female_explanation"] = r.female_judgment.explanation;
    j["male_neutral_explanation"] = r.male_neutral.explanation;
    j["female_neutral_explanation"] = r.female_neutral.explanation;
    return j;
}

BiasRecord record_from_json(const Json& j) {
    BiasRecord r;
    auto id = j.find("pair_id");
    if (id == j.end() || !id->is_number_integer()) {
        throw ParseError(ParseFailure::MissingSection, "integer field 'pair_id'");
    }
    r.pair.pair_id = id->get<std::int64_t>();
    r.pair.male_story = require_string(j, "male_story");
    r.pair.female_story = require_string(j, "female_story");
    r.pair.male_name = require_string(j, "male_name");
    r.pair.female_name = require_string(j, "female_name");
    r.pair.rouge1_f = require_number(j, "rouge1_f");
    r.male_judgment.stance = require_stance(j, "male_stance");
    r.female_judgment.stance = require_stance(j, "female_stance");
    r.male_judgment.explanation = require_string(j, "male_explanation");
    r.female_judgment.explanation = require_string(j, "female_explanation");
    r.male_neutral.explanation = require_string(j, "male_neutral_explanation");
    r.female_neutral.explanation = require_string(j, "female_neutral_explanation");
    validate(r);
    return r;
}

std::string render_dataset(const std::vector<BiasRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += dump_line(record_to_json(r));
        out += '\n';
    }
    return out;
}

void write_dataset(const std::filesystem::path& path, const std::vector<BiasRecord>& records) {
    write_text_file(path, render_dataset(records));
}

std::vector<BiasRecord> read_dataset(const std::filesystem::path& path) {
    std::vector<BiasRecord> records;
    std::size_t n = 0;
    for (const auto& row : read_jsonl(path)) {
        ++n;
        try {
            records.push_back(record_from_json(row));
        } catch (const ParseError& e) {
            throw ParseError(e.failure(), path.string() + " record " + std::to_string(n) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(e.kind(), path.string() + " record " + std::to_string(n) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace bias_forge::genpipe
