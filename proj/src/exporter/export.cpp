#include "exporter/export.hpp"

#include "core/errors.hpp"
#include "core/jsonl.hpp"
#include "core/prompts.hpp"

namespace bias_forge::exporter {
namespace {

void require_records(const std::vector<BiasRecord>& records) {
    if (records.empty()) throw Error(ErrorKind::Validation, "dataset is empty");
}

void require_neutral(const BiasRecord& r, const NeutralJudgment& n, std::string_view which) {
    if (trim(n.explanation).empty()) {
        throw Error(ErrorKind::Validation, "pair " + std::to_string(r.pair.pair_id) + ": empty " +
                                               std::string(which) + " neutral explanation");
    }
}

std::size_t write_lines(const std::filesystem::path& path, const std::vector<Json>& rows) {
    std::string out;
    for (const auto& row : rows) {
        out += dump_line(row);
        out += '\n';
    }
    write_text_file(path, out);
    return rows.size();
}

}  // namespace

std::string training_input(std::string_view story) {
    std::string s(story);
    s += "\n";
    s += prompts::kTrainingQuestion;
    return s;
}

std::vector<SftRecord> build_sft(const std::vector<BiasRecord>& records) {
    require_records(records);
    std::vector<SftRecord> out;
    out.reserve(records.size() * 2);
    for (const auto& r : records) {
        require_neutral(r, r.male_neutral, "male");
        require_neutral(r, r.female_neutral, "female");
        out.push_back({training_input(r.pair.male_story), r.male_neutral.explanation});
        out.push_back({training_input(r.pair.female_story), r.female_neutral.explanation});
    }
    return out;
}

std::vector<DpoRecord> build_dpo(const std::vector<BiasRecord>& records) {
    require_records(records);
    std::vector<DpoRecord> out;
    out.reserve(records.size() * 2);
    for (const auto& r : records) {
        require_neutral(r, r.male_neutral, "male");
        require_neutral(r, r.female_neutral, "female");
        const auto id = std::to_string(r.pair.pair_id);
        if (r.male_judgment.explanation == r.male_neutral.explanation) {
            throw Error(ErrorKind::Validation, "pair " + id + ": male rejected == chosen");
        }
        if (r.female_judgment.explanation == r.female_neutral.explanation) {
            throw Error(ErrorKind::Validation, "pair " + id + ": female rejected == chosen");
        }
        out.push_back({training_input(r.pair.male_story), r.male_judgment.explanation,
                       r.male_neutral.explanation});
        out.push_back({training_input(r.pair.female_story), r.female_judgment.explanation,
                       r.female_neutral.explanation});
    }
    return out;
}

std::size_t export_sft(const std::vector<BiasRecord>& records, const std::filesystem::path& path) {
    std::vector<Json> rows;
    for (const auto& rec : build_sft(records)) {
        Json j;
        j["input"] = rec.input;
        j["output"] = rec.output;
        rows.push_back(std::move(j));
    }
    return write_lines(path, rows);
}

std::size_t export_dpo(const std::vector<BiasRecord>& records, const std::filesystem::path& path) {
    std::vector<Json> rows;
    for (const auto& rec : build_dpo(records)) {
        Json j;
        j["prompt"] = rec.prompt;
        j["rejected"] = rec.rejected;
        j["chosen"] = rec.chosen;
        rows.push_back(std::move(j));
    }
    return write_lines(path, rows);
}

std::vector<SftRecord> read_sft(const std::filesystem::path& path) {
    std::vector<SftRecord> out;
    for (const auto& row : read_jsonl(path)) {
        out.push_back({require_string(row, "input"), require_string(row, "output")});
    }
    return out;
}

std::vector<DpoRecord> read_dpo(const std::filesystem::path& path) {
    std::vector<DpoRecord> out;
    for (const auto& row : read_jsonl(path)) {
        out.push_back({require_string(row, "prompt"), require_string(row, "rejected"),
                       require_string(row, "chosen")});
    }
    return out;
}

std::string render_fewshot_block(const std::vector<BiasRecord>& records, const FewshotOptions& opts) {
    if (opts.k < 1 || opts.k > 3) {
        throw Error(ErrorKind::InvalidArgument, "few-shot k must be between 1 and 3");
    }
    if (records.size() < opts.k) {
        throw Error(ErrorKind::InsufficientRecords, "few-shot block needs " + std::to_string(opts.k) +
                                                        " records, dataset has " +
                                                        std::to_string(records.size()));
    }
    std::string out;
    auto demo = [&](const std::string& story, const NeutralJudgment& neutral) {
        if (!out.empty()) out += "\n";
        out += "Story:\n";
        out += training_input(story);
        out += "\n";
        if (opts.include_stance) out += "STANCE: C. Both\n";
        out += "EXPLANATION: ";
        out += neutral.explanation;
        out += "\n";
    };
    for (std::size_t i = 0; i < opts.k; ++i) {
        demo(records[i].pair.male_story, records[i].male_neutral);
        demo(records[i].pair.female_story, records[i].female_neutral);
    }
    return out;
}

}  // namespace bias_forge::exporter
