#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "gateway/chat.hpp"

namespace bias_forge::gateway {

/// Answers unscripted requests. Must be a pure function of its arguments.
using FallbackResponder =
    std::function<std::string(const ChatRequest& request, const std::string& fingerprint)>;

/// Offline backend: a lookup table from fixture key to response text, with an
/// optional deterministic fallback for keys the script does not cover.
class MockBackend final : public ChatBackend {
public:
    MockBackend(std::string model_id, std::map<std::string, std::string> script,
                FallbackResponder fallback = {});

    /// Loads `<dir>/index.json` ({"<key>": "<file name>", ...}) and the text
    /// files it names.
    static std::map<std::string, std::string> load_fixture_dir(const std::filesystem::path& dir);
    /// Writes a script in the layout load_fixture_dir reads.
    static void write_fixture_dir(const std::filesystem::path& dir,
                                  const std::map<std::string, std::string>& script);

    std::string complete(const ChatRequest& request) override;
    const std::string& model_id() const noexcept override { return model_id_; }
    BackendStats stats() const override;

    struct Call {
        std::string key;
        std::string response;
        bool scripted = false;
    };
    /// Calls in completion order.
    std::vector<Call> calls() const;

private:
    std::string model_id_;
    std::map<std::string, std::string> script_;
    FallbackResponder fallback_;
    mutable std::mutex mu_;
    std::vector<Call> calls_;
};

}  // namespace bias_forge::gateway
