#include "evalkit/reports.hpp"

#include "core/errors.hpp"
#include "core/rounding.hpp"

namespace bias_forge::evalkit {
namespace {

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string cell(const std::optional<double>& v, int decimals) {
    return v ? format_fixed(*v, decimals) : std::string();
}

// Labels may contain commas; quote per RFC 4180 when needed.
std::string csv_text(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json counts_json(const SplitCounts& c) {
    Json j;
    j["items"] = c.items;
    j["tp"] = c.tp;
    j["fp"] = c.fp;
    j["fn"] = c.fn;
    j["precision"] = c.precision();
    j["recall"] = c.recall();
    j["f1"] = c.f1();
    j["f1_pct"] = 100.0 * c.f1();
    return j;
}

Json type_json(const std::optional<TypeSummary>& t) {
    if (!t) return nullptr;
    Json j;
    j["pro"] = t->pro;
    j["anti"] = t->anti;
    j["avg"] = t->avg;
    j["delta"] = t->delta;
    return j;
}

}  // namespace

Json to_json(const WinoBiasReport& r) {
    Json j;
    j["benchmark"] = "winobias";
    j["label"] = r.label;
    Json splits = Json::object();
    for (std::size_t s = 0; s < r.splits.size(); ++s) {
        if (r.splits[s].items > 0) splits[to_string(static_cast<WinoSplit>(s))] = counts_json(r.splits[s]);
    }
    j["splits"] = std::move(splits);
    j["type1"] = type_json(r.type1);
    j["type2"] = type_json(r.type2);
    j["delta1"] = r.type1 ? Json(r.type1->delta) : Json(nullptr);
    j["delta2"] = r.type2 ? Json(r.type2->delta) : Json(nullptr);
    j["delta_sum"] = opt(r.delta_sum());
    j["overall"] = r.overall.items > 0 ? counts_json(r.overall) : Json(nullptr);
    j["unparsed"] = r.unparsed;
    j["no_response"] = r.no_response;
    return j;
}

std::string to_csv(const WinoBiasReport& r) {
    auto pro = [](const std::optional<TypeSummary>& t) { return t ? std::optional(t->pro) : std::nullopt; };
    auto anti = [](const std::optional<TypeSummary>& t) { return t ? std::optional(t->anti) : std::nullopt; };
    auto avg = [](const std::optional<TypeSummary>& t) { return t ? std::optional(t->avg) : std::nullopt; };
    auto delta = [](const std::optional<TypeSummary>& t) { return t ? std::optional(t->delta) : std::nullopt; };
    const std::optional<double> overall =
        r.overall.items > 0 ? std::optional(r.overall_f1_pct()) : std::nullopt;
    std::string out = "label,T1-p,T1-a,T1-avg,T1-delta,T2-p,T2-a,T2-avg,T2-delta,overall,delta_sum\n";
    out += csv_text(r.label) + "," + cell(pro(r.type1), 1) + "," + cell(anti(r.type1), 1) + "," +
           cell(avg(r.type1), 1) + "," + cell(delta(r.type1), 1) + "," + cell(pro(r.type2), 1) + "," +
           cell(anti(r.type2), 1) + "," + cell(avg(r.type2), 1) + "," + cell(delta(r.type2), 1) + "," +
           cell(overall, 1) + "," + cell(r.delta_sum(), 1) + "\n";
    return out;
}

Json to_json(const GenmoReport& r) {
    Json j;
    j["benchmark"] = "genmo";
    j["label"] = r.label;
    j["n_pairs"] = r.n_pairs;
    j["excluded"] = r.excluded;
    j["n_scored"] = r.n_scored();
    j["pm"] = r.pm;
    j["pmr"] = r.pmr();
    j["female_favoring"] = r.female_favoring;
    j["male_favoring"] = r.male_favoring;
    j["fbr"] = opt(r.fbr());
    j["mbr"] = opt(r.mbr());
    j["delta"] = opt(r.delta());
    return j;
}

std::string to_csv(const GenmoReport& r) {
    std::string out = "label,PM,PMR,FBR,MBR,delta,excluded\n";
    out += csv_text(r.label) + "," + std::to_string(r.pm) + "," + format_fixed(r.pmr(), 3) + "," +
           cell(r.fbr(), 3) + "," + cell(r.mbr(), 3) + "," + cell(r.delta(), 3) + "," +
           std::to_string(r.excluded) + "\n";
    return out;
}

Json to_json(const McReport& r, const std::string& benchmark) {
    Json j;
    j["benchmark"] = benchmark;
    j["label"] = r.label;
    j["total"] = r.overall.total;
    j["correct"] = r.overall.correct;
    j["accuracy"] = r.overall.accuracy();
    j["accuracy_pct"] = 100.0 * r.overall.accuracy();
    j["macro_subject_accuracy"] = opt(r.macro_subject_accuracy());
    j["unparsed"] = r.unparsed;
    j["no_response"] = r.no_response;
    Json subjects = Json::object();
    for (const auto& [name, t] : r.per_subject) {
        subjects[name] = {{"total", t.total}, {"correct", t.correct}, {"accuracy", t.accuracy()}};
    }
    j["subjects"] = std::move(subjects);
    return j;
}

std::string to_csv(const McReport& r) {
    std::string out = "label,total,correct,accuracy,macro_subject_accuracy\n";
    const auto macro = r.macro_subject_accuracy();
    out += csv_text(r.label) + "," + std::to_string(r.overall.total) + "," +
           std::to_string(r.overall.correct) + "," + format_fixed(100.0 * r.overall.accuracy(), 1) + "," +
           (macro ? format_fixed(100.0 * *macro, 1) : std::string()) + "\n";
    return out;
}

std::string subjects_csv(const McReport& r) {
    std::string out = "subject,total,correct,accuracy\n";
    for (const auto& [name, t] : r.per_subject) {
        out += csv_text(name) + "," + std::to_string(t.total) + "," + std::to_string(t.correct) + "," +
               format_fixed(100.0 * t.accuracy(), 1) + "\n";
    }
    return out;
}

McReport mc_report_from_json(const Json& j) {
    McReport r;
    try {
        r.label = j.value("label", "");
        r.overall.total = j.at("total").get<std::size_t>();
        r.overall.correct = j.at("correct").get<std::size_t>();
        r.unparsed = j.value("unparsed", std::size_t{0});
        r.no_response = j.value("no_response", std::size_t{0});
        if (auto s = j.find("subjects"); s != j.end() && s->is_object()) {
            for (const auto& [name, v] : s->items()) {
                r.per_subject[name] = {v.at("total").get<std::size_t>(), v.at("correct").get<std::size_t>()};
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseFailure::Malformed, std::string("multiple-choice report: ") + e.what());
    }
    return r;
}

std::string subject_delta_csv(const std::vector<SubjectDelta>& deltas) {
    auto pct = [](const std::optional<double>& v) { return v ? std::optional(100.0 * *v) : std::nullopt; };
    std::string out = "subject,baseline,candidate,delta\n";
    for (const auto& d : deltas) {
        out += csv_text(d.subject) + "," + cell(pct(d.baseline), 1) + "," + cell(pct(d.candidate), 1) +
               "," + cell(pct(d.delta), 1) + "\n";
    }
    return out;
}

SelectionCandidate candidate_from_report(const Json& j, const std::string& fallback_label) {
    if (!j.is_object()) throw ParseError(ParseFailure::Malformed, "report is not a JSON object");
    if (auto b = j.find("benchmark"); b != j.end() && *b != "winobias") {
        throw ParseError(ParseFailure::Malformed, "not a WinoBias report");
    }
    SelectionCandidate c;
    auto label = j.find("label");
    c.label = (label != j.end() && label->is_string() && !label->get<std::string>().empty())
                  ? label->get<std::string>()
                  : fallback_label;
    c.delta1 = require_number(j, "delta1");
    c.delta2 = require_number(j, "delta2");
    return c;
}

std::string selection_table(const std::vector<SelectionCandidate>& candidates) {
    std::string out = "label,delta1,delta2,delta_sum\n";
    for (const auto& c : candidates) {
        out += csv_text(c.label) + "," + format_fixed(c.delta1, 1) + "," + format_fixed(c.delta2, 1) + "," +
               format_fixed(c.delta_sum(), 1) + "\n";
    }
    return out;
}

}  // namespace bias_forge::evalkit
