#include "evalkit/transcripts.hpp"

#include "core/errors.hpp"
#include "core/jsonl.hpp"

namespace bias_forge::evalkit {

const char* to_string(ParseStatus status) noexcept {
    switch (status) {
        case ParseStatus::Ok: return "ok";
        case ParseStatus::ParseFailed: return "parse_failed";
        case ParseStatus::NoResponse: return "no_response";
    }
    return "no_response";
}

void write_transcripts(const std::filesystem::path& path, const std::vector<EvalTranscript>& rows) {
    std::string out;
    for (const auto& t : rows) {
        Json j;
        j["item_id"] = t.item_id;
        j["prompt"] = t.prompt;
        j["raw_response"] = t.raw_response;
        j["status"] = to_string(t.status);
        j["parsed"] = t.status == ParseStatus::Ok ? Json(t.parsed) : Json(nullptr);
        if (!t.error.empty()) j["error"] = t.error;
        out += dump_line(j);
        out += '\n';
    }
    write_text_file(path, out);
}

std::vector<EvalTranscript> read_transcripts(const std::filesystem::path& path) {
    std::vector<EvalTranscript> rows;
    for (const auto& j : read_jsonl(path)) {
        EvalTranscript t;
        t.item_id = require_string(j, "item_id");
        t.prompt = j.value("prompt", "");
        t.raw_response = require_string(j, "raw_response");
        const std::string status = j.value("status", "ok");
        t.status = status == "ok" ? ParseStatus::Ok
                   : status == "parse_failed" ? ParseStatus::ParseFailed
                                              : ParseStatus::NoResponse;
        if (auto p = j.find("parsed"); p != j.end() && p->is_string()) t.parsed = p->get<std::string>();
        t.error = j.value("error", "");
        rows.push_back(std::move(t));
    }
    return rows;
}

LiveSource::LiveSource(gateway::ChatBackend& backend, double temperature, int max_tokens,
                       std::size_t parallelism)
    : backend_(backend), temperature_(temperature), max_tokens_(max_tokens), parallelism_(parallelism) {}

std::string LiveSource::respond(const std::string&, const std::string& prompt) {
    return backend_.complete(gateway::user_request(prompt, temperature_, max_tokens_));
}

CachedSource::CachedSource(const std::vector<EvalTranscript>& rows) {
    for (const auto& t : rows) {
        // responses that never arrived stay missing
        if (t.status != ParseStatus::NoResponse) responses_[t.item_id] = t.raw_response;
    }
}

std::string CachedSource::respond(const std::string& item_id, const std::string&) {
    auto it = responses_.find(item_id);
    if (it == responses_.end()) {
        throw Error(ErrorKind::MissingFixture, "no transcript for item " + item_id);
    }
    return it->second;
}

}  // namespace bias_forge::evalkit
