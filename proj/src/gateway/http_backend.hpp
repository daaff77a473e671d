#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <semaphore>
#include <string>

#include "gateway/chat.hpp"

namespace bias_forge::gateway {

struct BackendConfig {
    std::string endpoint = "http://127.0.0.1:8000";  // scheme://host[:port]
    std::string path = "/v1/chat/completions";
    std::string model;
    std::string token_env = "BIAS_FORGE_API_KEY";
    double timeout_s = 60.0;
    int max_retries = 3;
    double backoff_base_s = 0.5;
    int max_in_flight = 4;

    /// Throws Config on a non-positive timeout, negative retries or an empty
    /// endpoint/model.
    void validate() const;
};

/// Chat-completions over HTTP(S). Transient failures (transport errors, 408,
/// 429 and 5xx) are retried with exponential backoff: the k-th retry waits
/// backoff_base_s * 2^(k-1). Other 4xx responses fail immediately.
class HttpBackend final : public ChatBackend {
public:
    using Sleeper = std::function<void(std::chrono::duration<double>)>;

    explicit HttpBackend(BackendConfig config, Sleeper sleeper = {});

    std::string complete(const ChatRequest& request) override;
    const std::string& model_id() const noexcept override { return config_.model; }
    BackendStats stats() const override;

    /// Request body as sent on the wire.
    static std::string render_body(const std::string& model, const ChatRequest& request);
    /// Pulls choices[0].message.content out of a response body. Throws
    /// Backend on an unexpected shape and EmptyResponse on blank content.
    static std::string extract_content(const std::string& body);

private:
    BackendConfig config_;
    Sleeper sleeper_;
    std::unique_ptr<std::counting_semaphore<1024>> in_flight_;
    std::atomic<std::uint64_t> requests_{0};
    std::atomic<std::uint64_t> retries_{0};
    std::atomic<std::uint64_t> failures_{0};
};

}  // namespace bias_forge::gateway
