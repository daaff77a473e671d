#include "core/errors.hpp"
#include "core/types.hpp"

namespace bias_forge {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid argument";
        case ErrorKind::Config: return "config error";
        case ErrorKind::Transport: return "transport error";
        case ErrorKind::Backend: return "backend error";
        case ErrorKind::EmptyResponse: return "empty response";
        case ErrorKind::MissingFixture: return "missing fixture";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Validation: return "validation error";
        case ErrorKind::InsufficientRecords: return "insufficient records";
        case ErrorKind::BudgetExhausted: return "budget exhausted";
        case ErrorKind::Io: return "io error";
        case ErrorKind::DimensionMismatch: return "dimension mismatch";
        case ErrorKind::ZeroVector: return "zero vector";
        case ErrorKind::LayerCountMismatch: return "layer count mismatch";
        case ErrorKind::NoSharedInputs: return "no shared inputs";
    }
    return "unknown error";
}

const char* to_string(ParseFailure failure) noexcept {
    switch (failure) {
        case ParseFailure::MissingSection: return "missing_section";
        case ParseFailure::BadStance: return "bad_stance";
        case ParseFailure::NoStanceLine: return "no_stance_line";
        case ParseFailure::Unmappable: return "unmappable";
        case ParseFailure::Malformed: return "malformed";
    }
    return "unknown";
}

std::string_view to_string(Stance s) noexcept {
    switch (s) {
        case Stance::Moral: return "Moral";
        case Stance::Immoral: return "Immoral";
        case Stance::Both: return "Both";
        case Stance::CantSay: return "Can't say";
    }
    return "";
}

std::optional<Stance> stance_from_string(std::string_view text) {
    const std::string t = to_lower_ascii(trim(text));
    if (t == "moral") return Stance::Moral;
    if (t == "immoral") return Stance::Immoral;
    if (t == "both") return Stance::Both;
    if (t == "can't say" || t == "cant say" || t == "cantsay") return Stance::CantSay;
    return std::nullopt;
}

std::string trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

}  // namespace bias_forge
