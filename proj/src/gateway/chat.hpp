#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bias_forge::gateway {

enum class Role { System, User, Assistant };

std::string_view to_string(Role role) noexcept;

struct Message {
    Role role = Role::User;
    std::string content;
};

struct ChatRequest {
    std::vector<Message> messages;
    double temperature = 0.0;
    int max_tokens = 1024;
    std::optional<std::int64_t> seed;

    /// Non-empty messages ending in a user turn, temperature >= 0,
    /// max_tokens > 0. Throws InvalidArgument otherwise.
    void validate() const;
};

/// Single user-turn request, the shape every pipeline prompt uses.
ChatRequest user_request(std::string prompt, double temperature, int max_tokens,
                         std::optional<std::int64_t> seed = std::nullopt);

struct BackendStats {
    std::uint64_t requests = 0;
    std::uint64_t retries = 0;
    std::uint64_t failures = 0;
};

/// Chat-completion access for one role (generator, judge, neutralizer or
/// evaluated model). Implementations are safe to call from several threads.
class ChatBackend {
public:
    virtual ~ChatBackend() = default;

    /// Returns the assistant message text. Throws Error with kind Transport,
    /// Backend, EmptyResponse, MissingFixture or InvalidArgument.
    virtual std::string complete(const ChatRequest& request) = 0;
    virtual const std::string& model_id() const noexcept = 0;
    virtual BackendStats stats() const { return {}; }
};

/// Hex SHA-256 of (model id, temperature, rendered messages). The seed is
/// deliberately not part of it; see fixture_key.
std::string fingerprint(std::string_view model_id, const ChatRequest& request);

/// Mock lookup key: "<fingerprint>#<seed>" for seeded requests, the bare
/// fingerprint otherwise.
std::string fixture_key(std::string_view fingerprint, std::optional<std::int64_t> seed);

}  // namespace bias_forge::gateway
