#pragma once

#include <memory>

#include "config/config.hpp"
#include "gateway/chat.hpp"

namespace bias_forge::config {

/// Builds the backend for one role. Mock backends load their fixture dir
/// (role-specific, else [paths] fixtures) and answer the rest with the
/// synthetic responder seeded from [pipeline] seed, unless fallback = none.
std::unique_ptr<gateway::ChatBackend> make_backend(const Config& cfg, BackendRole role);

/// Switches every role to the mock backend.
void force_mock(Config& cfg);

}  // namespace bias_forge::config
