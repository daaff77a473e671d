#include "gateway/http_backend.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdlib>
#include <thread>

#include "core/errors.hpp"
#include "core/jsonl.hpp"
#include "core/types.hpp"

namespace bias_forge::gateway {
namespace {

bool retryable_status(int status) { return status == 408 || status == 429 || status >= 500; }

// RAII slot in the in-flight limit.
class SlotGuard {
public:
    explicit SlotGuard(std::counting_semaphore<1024>& sem) : sem_(sem) { sem_.acquire(); }
    ~SlotGuard() { sem_.release(); }
    SlotGuard(const SlotGuard&) = delete;
    SlotGuard& operator=(const SlotGuard&) = delete;

private:
    std::counting_semaphore<1024>& sem_;
};

}  // namespace

void BackendConfig::validate() const {
    if (endpoint.empty()) throw Error(ErrorKind::Config, "backend endpoint is empty");
    if (model.empty()) throw Error(ErrorKind::Config, "backend model is empty");
    if (!(timeout_s > 0.0)) throw Error(ErrorKind::Config, "backend timeout must be positive");
    if (max_retries < 0) throw Error(ErrorKind::Config, "backend max_retries must be >= 0");
    if (!(backoff_base_s >= 0.0)) throw Error(ErrorKind::Config, "backend backoff must be >= 0");
    if (max_in_flight < 1 || max_in_flight > 1024) {
        throw Error(ErrorKind::Config, "backend max_in_flight must be in [1, 1024]");
    }
}

HttpBackend::HttpBackend(BackendConfig config, Sleeper sleeper)
    : config_(std::move(config)), sleeper_(std::move(sleeper)) {
    config_.validate();
    if (!sleeper_) {
        sleeper_ = [](std::chrono::duration<double> d) { std::this_thread::sleep_for(d); };
    }
    in_flight_ = std::make_unique<std::counting_semaphore<1024>>(config_.max_in_flight);
}

std::string HttpBackend::render_body(const std::string& model, const ChatRequest& request) {
    Json body;
    body["model"] = model;
    Json messages = Json::array();
    for (const auto& m : request.messages) {
        messages.push_back({{"role", std::string(to_string(m.role))}, {"content", m.content}});
    }
    body["messages"] = std::move(messages);
    body["temperature"] = request.temperature;
    body["max_tokens"] = request.max_tokens;
    if (request.seed) body["seed"] = *request.seed;
    return dump_line(body);
}

std::string HttpBackend::extract_content(const std::string& body) {
    Json parsed;
    try {
        parsed = Json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Backend, std::string("response is not JSON: ") + e.what());
    }
    const auto choices = parsed.find("choices");
    if (choices == parsed.end() || !choices->is_array() || choices->empty()) {
        throw Error(ErrorKind::Backend, "response has no choices");
    }
    const auto& first = (*choices)[0];
    const auto message = first.find("message");
    if (message == first.end() || !message->is_object()) {
        throw Error(ErrorKind::Backend, "first choice has no message");
    }
    const auto content = message->find("content");
    if (content == message->end() || content->is_null()) {
        throw Error(ErrorKind::EmptyResponse, "first choice has no content");
    }
    if (!content->is_string()) throw Error(ErrorKind::Backend, "message content is not text");
    std::string text = content->get<std::string>();
    if (trim(text).empty()) throw Error(ErrorKind::EmptyResponse, "assistant message is empty");
    return text;
}

std::string HttpBackend::complete(const ChatRequest& request) {
    request.validate();
    const std::string body = render_body(config_.model, request);

    httplib::Headers headers;
    if (!config_.token_env.empty()) {
        if (const char* token = std::getenv(config_.token_env.c_str()); token && *token) {
            headers.emplace("Authorization", std::string("Bearer ") + token);
        }
    }

    SlotGuard slot(*in_flight_);
    ++requests_;
    const auto timeout_us = static_cast<long>(config_.timeout_s * 1e6);
    std::string last_error;
    bool last_was_transport = false;

    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
        if (attempt > 0) {
            ++retries_;
            sleeper_(std::chrono::duration<double>(config_.backoff_base_s *
                                                   std::pow(2.0, attempt - 1)));
        }
        httplib::Client client(config_.endpoint);
        client.set_connection_timeout(timeout_us / 1000000, timeout_us % 1000000);
        client.set_read_timeout(timeout_us / 1000000, timeout_us % 1000000);
        client.set_write_timeout(timeout_us / 1000000, timeout_us % 1000000);

        auto res = client.Post(config_.path, headers, body, "application/json");
        if (!res) {
            last_was_transport = true;
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status >= 200 && res->status < 300) {
            try {
                return extract_content(res->body);
            } catch (...) {
                ++failures_;
                throw;
            }
        }
        last_was_transport = false;
        last_error = "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200);
        if (!retryable_status(res->status)) break;
    }
    ++failures_;
    throw Error(last_was_transport ? ErrorKind::Transport : ErrorKind::Backend, last_error);
}

BackendStats HttpBackend::stats() const { return {requests_.load(), retries_.load(), failures_.load()}; }

}  // namespace bias_forge::gateway
