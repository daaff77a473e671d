#include "config/backend_factory.hpp"

#include "gateway/http_backend.hpp"
#include "gateway/mock_backend.hpp"
#include "gateway/synthetic_responder.hpp"

namespace bias_forge::config {

std::unique_ptr<gateway::ChatBackend> make_backend(const Config& cfg, BackendRole role) {
    const auto& b = cfg.backend(role);
    if (b.kind == "http") return std::make_unique<gateway::HttpBackend>(b.http);

    const std::string& dir = b.fixtures.empty() ? cfg.paths.fixtures : b.fixtures;
    std::map<std::string, std::string> script;
    if (!dir.empty()) script = gateway::MockBackend::load_fixture_dir(dir);
    gateway::FallbackResponder fallback;
    if (b.fallback == "synthetic") {
        fallback = gateway::synthetic_responder(static_cast<std::uint64_t>(cfg.pipeline.seed));
    }
    const std::string model = b.http.model.empty() ? "mock" : b.http.model;
    return std::make_unique<gateway::MockBackend>(model, std::move(script), std::move(fallback));
}

void force_mock(Config& cfg) {
    for (auto& b : cfg.backends) b.kind = "mock";
}

}  // namespace bias_forge::config
