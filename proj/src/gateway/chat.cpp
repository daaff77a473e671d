#include "gateway/chat.hpp"

#include "core/errors.hpp"

namespace bias_forge::gateway {

std::string_view to_string(Role role) noexcept {
    switch (role) {
        case Role::System: return "system";
        case Role::User: return "user";
        case Role::Assistant: return "assistant";
    }
    return "user";
}

void ChatRequest::validate() const {
    if (messages.empty()) {
        throw Error(ErrorKind::InvalidArgument, "chat request has no messages");
    }
    if (messages.back().role != Role::User) {
        throw Error(ErrorKind::InvalidArgument, "last chat message must be a user turn");
    }
    if (!(temperature >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "temperature must be non-negative");
    }
    if (max_tokens <= 0) {
        throw Error(ErrorKind::InvalidArgument, "max_tokens must be positive");
    }
}

ChatRequest user_request(std::string prompt, double temperature, int max_tokens,
                         std::optional<std::int64_t> seed) {
    ChatRequest req;
    req.messages.push_back({Role::User, std::move(prompt)});
    req.temperature = temperature;
    req.max_tokens = max_tokens;
    req.seed = seed;
    return req;
}

std::string fixture_key(std::string_view fingerprint, std::optional<std::int64_t> seed) {
    std::string key(fingerprint);
    if (seed) key += "#" + std::to_string(*seed);
    return key;
}

}  // namespace bias_forge::gateway
