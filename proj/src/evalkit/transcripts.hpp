#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gateway/chat.hpp"

namespace bias_forge::evalkit {

enum class ParseStatus { Ok, ParseFailed, NoResponse };

const char* to_string(ParseStatus status) noexcept;

/// One benchmark item as seen by the model. `parsed` holds the benchmark's
/// parsed value as text (stance, occupation or letter) when status is Ok.
struct EvalTranscript {
    std::string item_id;
    std::string prompt;
    std::string raw_response;
    ParseStatus status = ParseStatus::NoResponse;
    std::string parsed;
    std::string error;
};

void write_transcripts(const std::filesystem::path& path, const std::vector<EvalTranscript>& rows);
std::vector<EvalTranscript> read_transcripts(const std::filesystem::path& path);

/// Where model responses come from: a live backend or a transcript cache.
class ResponseSource {
public:
    virtual ~ResponseSource() = default;
    /// Raw response for one item. Throws Error on a per-item failure.
    virtual std::string respond(const std::string& item_id, const std::string& prompt) = 0;
    /// Evaluation items that may run concurrently.
    virtual std::size_t parallelism() const noexcept { return 1; }
};

class LiveSource final : public ResponseSource {
public:
    LiveSource(gateway::ChatBackend& backend, double temperature, int max_tokens,
               std::size_t parallelism = 1);
    std::string respond(const std::string& item_id, const std::string& prompt) override;
    std::size_t parallelism() const noexcept override { return parallelism_; }

private:
    gateway::ChatBackend& backend_;
    double temperature_;
    int max_tokens_;
    std::size_t parallelism_;
};

/// Replays recorded raw responses by item id, re-parsing them from scratch.
/// Missing ids raise MissingFixture for that item only.
class CachedSource final : public ResponseSource {
public:
    explicit CachedSource(const std::vector<EvalTranscript>& rows);
    std::string respond(const std::string& item_id, const std::string& prompt) override;

private:
    std::map<std::string, std::string> responses_;
};

}  // namespace bias_forge::evalkit
