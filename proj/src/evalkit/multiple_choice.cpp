#include "evalkit/multiple_choice.hpp"

#include <cctype>
#include <set>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/prompts.hpp"
#include "core/types.hpp"
#include "genpipe/templates.hpp"

namespace bias_forge::evalkit {
namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::string render_mc_prompt(const McItem& item) {
    std::string choices;
    for (std::size_t i = 0; i < item.choices.size(); ++i) {
        if (i) choices += "\n";
        choices += static_cast<char>('A' + i);
        choices += ". ";
        choices += item.choices[i];
    }
    return genpipe::fill_template(prompts::kMultipleChoice,
                                  {{"question", item.question}, {"choices", choices}});
}

std::optional<char> parse_answer_letter(std::string_view raw, std::size_t n_choices) {
    if (n_choices == 0) return std::nullopt;
    const char last = static_cast<char>('A' + std::min<std::size_t>(n_choices, 26) - 1);
    const std::string lower = to_lower_ascii(raw);
    std::size_t pos = 0;
    while ((pos = lower.find("answer is", pos)) != std::string::npos) {
        std::size_t i = pos + 9;
        while (i < lower.size() && (lower[i] == ' ' || lower[i] == ':' || lower[i] == '(' ||
                                    lower[i] == '*' || lower[i] == '"' || lower[i] == '\'')) {
            ++i;
        }
        if (i < lower.size()) {
            const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(lower[i])));
            const bool right_ok = i + 1 == lower.size() || !is_word_char(lower[i + 1]);
            if (c >= 'A' && c <= last && right_ok) return c;
        }
        pos += 9;
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c < 'A' || c > last) continue;
        const bool left_ok = i == 0 || !is_word_char(raw[i - 1]);
        const bool right_ok = i + 1 == raw.size() || !is_word_char(raw[i + 1]);
        if (left_ok && right_ok) return c;
    }
    return std::nullopt;
}

double McTally::accuracy() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

std::optional<double> McReport::macro_subject_accuracy() const {
    if (per_subject.empty()) return std::nullopt;
    double sum = 0.0;
    for (const auto& [_, t] : per_subject) sum += t.accuracy();
    return sum / static_cast<double>(per_subject.size());
}

McRun eval_mc(const std::vector<McItem>& items, ResponseSource& source) {
    if (items.empty()) throw Error(ErrorKind::InvalidArgument, "no multiple-choice items");
    McRun run;
    run.transcripts = parallel_map(items.size(), source.parallelism(), [&](std::size_t i) {
        const auto& item = items[i];
        EvalTranscript t;
        t.item_id = item.item_id;
        t.prompt = render_mc_prompt(item);
        try {
            t.raw_response = source.respond(item.item_id, t.prompt);
        } catch (const Error& e) {
            t.status = ParseStatus::NoResponse;
            t.error = e.what();
            return t;
        }
        if (auto letter = parse_answer_letter(t.raw_response, item.choices.size())) {
            t.status = ParseStatus::Ok;
            t.parsed = std::string(1, *letter);
        } else {
            t.status = ParseStatus::ParseFailed;
            t.error = "no answer letter";
        }
        return t;
    });

    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& t = run.transcripts[i];
        const bool correct = t.status == ParseStatus::Ok && t.parsed[0] == items[i].gold_letter;
        if (t.status == ParseStatus::ParseFailed) ++run.report.unparsed;
        if (t.status == ParseStatus::NoResponse) ++run.report.no_response;
        ++run.report.overall.total;
        run.report.overall.correct += correct ? 1 : 0;
        if (!items[i].subject.empty()) {
            auto& s = run.report.per_subject[items[i].subject];
            ++s.total;
            s.correct += correct ? 1 : 0;
        }
    }
    return run;
}

std::vector<SubjectDelta> compare_subjects(const McReport& baseline, const McReport& candidate) {
    std::set<std::string> subjects;
    for (const auto& [s, _] : baseline.per_subject) subjects.insert(s);
    for (const auto& [s, _] : candidate.per_subject) subjects.insert(s);
    std::vector<SubjectDelta> out;
    for (const auto& s : subjects) {
        SubjectDelta d;
        d.subject = s;
        if (auto it = baseline.per_subject.find(s); it != baseline.per_subject.end()) {
            d.baseline = it->second.accuracy();
        }
        if (auto it = candidate.per_subject.find(s); it != candidate.per_subject.end()) {
            d.candidate = it->second.accuracy();
        }
        if (d.baseline && d.candidate) d.delta = *d.candidate - *d.baseline;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace bias_forge::evalkit
