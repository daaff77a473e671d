#include "config/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "core/types.hpp"

namespace bias_forge::config {
namespace {

[[noreturn]] void bad(std::string_view section, std::string_view key, const std::string& why) {
    throw Error(ErrorKind::Config, "[" + std::string(section) + "] " + std::string(key) + ": " + why);
}

double to_double(std::string_view section, std::string_view key, std::string_view v) {
    double out = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) {
        bad(section, key, "'" + std::string(v) + "' is not a number");
    }
    return out;
}

template <typename Int>
Int to_int(std::string_view section, std::string_view key, std::string_view v) {
    Int out{};
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) {
        bad(section, key, "'" + std::string(v) + "' is not an integer");
    }
    return out;
}

bool to_bool(std::string_view section, std::string_view key, std::string_view v) {
    const std::string t = to_lower_ascii(v);
    if (t == "true" || t == "yes" || t == "1" || t == "on") return true;
    if (t == "false" || t == "no" || t == "0" || t == "off") return false;
    bad(section, key, "'" + std::string(v) + "' is not a boolean");
}

}  // namespace

std::string_view to_string(BackendRole role) noexcept {
    switch (role) {
        case BackendRole::Gen: return "gen";
        case BackendRole::Judge: return "judge";
        case BackendRole::Neutral: return "neutral";
        case BackendRole::Eval: return "eval";
    }
    return "";
}

void Config::set(std::string_view section, std::string_view key, std::string_view value) {
    const std::string v = trim(value);
    if (section == "pipeline") {
        auto& p = pipeline;
        if (key == "n") p.target_pairs = to_int<std::size_t>(section, key, v);
        else if (key == "band_lo") p.band.tau_lo = to_double(section, key, v);
        else if (key == "band_hi") p.band.tau_hi = to_double(section, key, v);
        else if (key == "max_attempts") p.max_attempts = to_int<std::size_t>(section, key, v);
        else if (key == "parallelism") p.parallelism = to_int<std::size_t>(section, key, v);
        else if (key == "seed") p.seed = to_int<std::int64_t>(section, key, v);
        else if (key == "generation_temperature") p.generation_temperature = to_double(section, key, v);
        else if (key == "judge_temperature") p.judge_temperature = to_double(section, key, v);
        else if (key == "neutral_temperature") p.neutral_temperature = to_double(section, key, v);
        else if (key == "max_tokens") p.max_tokens = to_int<int>(section, key, v);
        else bad(section, key, "unknown key");
        return;
    }
    if (section == "templates") {
        if (key == "family") template_family = v;
        else bad(section, key, "unknown key");
        return;
    }
    if (section == "paths") {
        if (key == "output_dir") paths.output_dir = v;
        else if (key == "fixtures") paths.fixtures = v;
        else bad(section, key, "unknown key");
        return;
    }
    if (section == "eval") {
        if (key == "parallelism") eval.parallelism = to_int<std::size_t>(section, key, v);
        else if (key == "temperature") eval.temperature = to_double(section, key, v);
        else if (key == "max_tokens") eval.max_tokens = to_int<int>(section, key, v);
        else if (key == "fewshot_k") eval.fewshot_k = to_int<std::size_t>(section, key, v);
        else if (key == "fewshot_stance") eval.fewshot_stance = to_bool(section, key, v);
        else bad(section, key, "unknown key");
        return;
    }
    for (BackendRole role : kAllRoles) {
        if (section != "backend." + std::string(to_string(role))) continue;
        auto& b = backend(role);
        if (key == "kind") b.kind = v;
        else if (key == "endpoint") b.http.endpoint = v;
        else if (key == "path") b.http.path = v;
        else if (key == "model") b.http.model = v;
        else if (key == "token_env") b.http.token_env = v;
        else if (key == "timeout_s") b.http.timeout_s = to_double(section, key, v);
        else if (key == "max_retries") b.http.max_retries = to_int<int>(section, key, v);
        else if (key == "backoff_base_s") b.http.backoff_base_s = to_double(section, key, v);
        else if (key == "max_in_flight") b.http.max_in_flight = to_int<int>(section, key, v);
        else if (key == "fixtures") b.fixtures = v;
        else if (key == "fallback") b.fallback = v;
        else bad(section, key, "unknown key");
        return;
    }
    throw Error(ErrorKind::Config, "unknown section [" + std::string(section) + "]");
}

void Config::apply_override(std::string_view assignment) {
    const auto eq = assignment.find('=');
    const auto dot = assignment.substr(0, eq).rfind('.');
    if (eq == std::string_view::npos || dot == std::string_view::npos) {
        throw Error(ErrorKind::Config, "override '" + std::string(assignment) + "' is not section.key=value");
    }
    set(trim(assignment.substr(0, dot)), trim(assignment.substr(dot + 1, eq - dot - 1)),
        assignment.substr(eq + 1));
}

void Config::validate() const {
    pipeline.validate();
    (void)genpipe::PromptTemplates::for_family(template_family);
    if (eval.parallelism == 0) throw Error(ErrorKind::Config, "[eval] parallelism must be positive");
    if (eval.temperature < 0.0) throw Error(ErrorKind::Config, "[eval] temperature must be >= 0");
    if (eval.max_tokens <= 0) throw Error(ErrorKind::Config, "[eval] max_tokens must be positive");
    if (eval.fewshot_k < 1 || eval.fewshot_k > 3) {
        throw Error(ErrorKind::Config, "[eval] fewshot_k must be 1, 2 or 3");
    }
    for (BackendRole role : kAllRoles) {
        const auto& b = backend(role);
        const std::string where = "[backend." + std::string(to_string(role)) + "] ";
        if (b.kind == "http") {
            b.http.validate();
        } else if (b.kind != "mock") {
            throw Error(ErrorKind::Config, where + "kind must be mock or http");
        }
        if (b.fallback != "synthetic" && b.fallback != "none") {
            throw Error(ErrorKind::Config, where + "fallback must be synthetic or none");
        }
    }
}

Config parse_config(std::string_view text, const std::string& origin) {
    Config cfg;
    std::istringstream in{std::string(text)};
    std::string line, section;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const std::string where = origin + ":" + std::to_string(n) + ": ";
        if (t.front() == '[') {
            if (t.back() != ']') throw Error(ErrorKind::Config, where + "unterminated section header");
            section = trim(std::string_view(t).substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Config, where + "expected key = value");
        if (section.empty()) throw Error(ErrorKind::Config, where + "key outside any section");
        try {
            cfg.set(section, trim(std::string_view(t).substr(0, eq)), std::string_view(t).substr(eq + 1));
        } catch (const Error& e) {
            throw Error(ErrorKind::Config, where + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Config, "cannot read config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string());
}

}  // namespace bias_forge::config
