#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "gateway/http_backend.hpp"
#include "genpipe/pipeline.hpp"

namespace bias_forge::config {

enum class BackendRole { Gen, Judge, Neutral, Eval };
inline constexpr std::array<BackendRole, 4> kAllRoles = {BackendRole::Gen, BackendRole::Judge,
                                                         BackendRole::Neutral, BackendRole::Eval};
/// "gen", "judge", "neutral", "eval".
std::string_view to_string(BackendRole role) noexcept;

struct RoleBackend {
    std::string kind = "mock";  // mock | http
    gateway::BackendConfig http;
    std::string fixtures;        // mock fixture dir; empty uses [paths] fixtures
    std::string fallback = "synthetic";  // synthetic | none
};

struct EvalSettings {
    std::size_t parallelism = 1;
    double temperature = 0.0;
    int max_tokens = 1024;
    std::size_t fewshot_k = 1;
    bool fewshot_stance = false;
};

struct PathSettings {
    std::string output_dir = "out";
    std::string fixtures;
};

struct Config {
    genpipe::PipelineConfig pipeline;
    std::string template_family = "llama";
    PathSettings paths;
    EvalSettings eval;
    std::array<RoleBackend, 4> backends;

    RoleBackend& backend(BackendRole role) { return backends[static_cast<std::size_t>(role)]; }
    const RoleBackend& backend(BackendRole role) const {
        return backends[static_cast<std::size_t>(role)];
    }

    /// Sets one key. `section` is e.g. "pipeline" or "backend.judge". Throws
    /// Config on unknown sections/keys and unparseable values.
    void set(std::string_view section, std::string_view key, std::string_view value);
    /// "section.key=value".
    void apply_override(std::string_view assignment);
    /// Range and consistency checks. Throws Config.
    void validate() const;
};

/// INI-style text: [section] lines, key = value lines, '#' or ';' comments.
/// Unknown keys are errors. The result is validated.
Config parse_config(std::string_view text, const std::string& origin);
/// Throws Config when the file cannot be read.
Config load_config(const std::filesystem::path& path);

}  // namespace bias_forge::config
