#pragma once

#include <cstdint>

#include "gateway/mock_backend.hpp"

namespace bias_forge::gateway {

/// Deterministic stand-in model for offline runs. Recognizes the prompt kind
/// from the last user message and answers in the expected format: story
/// pairs (with some out-of-band and malformed ones), judge stances,
/// neutralized explanations, WinoBias brackets and multiple-choice letters.
/// Every answer is a function of (seed, fingerprint, request seed).
FallbackResponder synthetic_responder(std::uint64_t seed);

}  // namespace bias_forge::gateway
