#include "gateway/mock_backend.hpp"

#include "core/errors.hpp"
#include "core/jsonl.hpp"
#include "core/types.hpp"

namespace bias_forge::gateway {

MockBackend::MockBackend(std::string model_id, std::map<std::string, std::string> script,
                         FallbackResponder fallback)
    : model_id_(std::move(model_id)), script_(std::move(script)), fallback_(std::move(fallback)) {}

std::map<std::string, std::string> MockBackend::load_fixture_dir(const std::filesystem::path& dir) {
    const auto index_path = dir / "index.json";
    Json index;
    try {
        index = Json::parse(read_text_file(index_path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseFailure::Malformed, index_path.string() + ": " + e.what());
    }
    if (!index.is_object()) {
        throw ParseError(ParseFailure::Malformed, index_path.string() + ": expected an object");
    }
    std::map<std::string, std::string> script;
    for (const auto& [key, file] : index.items()) {
        if (!file.is_string()) {
            throw ParseError(ParseFailure::Malformed, index_path.string() + ": entry " + key);
        }
        script.emplace(key, read_text_file(dir / file.get<std::string>()));
    }
    return script;
}

void MockBackend::write_fixture_dir(const std::filesystem::path& dir,
                                    const std::map<std::string, std::string>& script) {
    Json index = Json::object();
    std::size_t n = 0;
    for (const auto& [key, text] : script) {
        const std::string name = "fixture_" + std::to_string(n++) + ".txt";
        write_text_file(dir / name, text);
        index[key] = name;
    }
    write_text_file(dir / "index.json", index.dump(2) + "\n");
}

std::string MockBackend::complete(const ChatRequest& request) {
    request.validate();
    const std::string fp = fingerprint(model_id_, request);
    const std::string key = fixture_key(fp, request.seed);

    Call call{key, {}, true};
    if (auto it = script_.find(key); it != script_.end()) {
        call.response = it->second;
    } else if (auto bare = script_.find(fp); request.seed && bare != script_.end()) {
        call.response = bare->second;
    } else if (fallback_) {
        call.response = fallback_(request, fp);
        call.scripted = false;
    } else {
        throw Error(ErrorKind::MissingFixture, "no fixture for " + key);
    }
    if (trim(call.response).empty()) {
        throw Error(ErrorKind::EmptyResponse, "fixture " + key + " is empty");
    }
    std::lock_guard lock(mu_);
    calls_.push_back(call);
    return call.response;
}

BackendStats MockBackend::stats() const {
    std::lock_guard lock(mu_);
    return {calls_.size(), 0, 0};
}

std::vector<MockBackend::Call> MockBackend::calls() const {
    std::lock_guard lock(mu_);
    return calls_;
}

}  // namespace bias_forge::gateway
