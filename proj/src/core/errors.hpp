#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bias_forge {

enum class ErrorKind {
    InvalidArgument,
    Config,
    Transport,
    Backend,
    EmptyResponse,
    MissingFixture,
    Parse,
    Validation,
    InsufficientRecords,
    BudgetExhausted,
    Io,
    DimensionMismatch,
    ZeroVector,
    LayerCountMismatch,
    NoSharedInputs,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error thrown by the library. The C API maps `kind()` onto
/// its status codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

enum class ParseFailure {
    MissingSection,
    BadStance,
    NoStanceLine,
    Unmappable,
    Malformed,
};

const char* to_string(ParseFailure failure) noexcept;

class ParseError : public Error {
public:
    ParseError(ParseFailure failure, const std::string& detail)
        : Error(ErrorKind::Parse, std::string(to_string(failure)) + ": " + detail),
          failure_(failure) {}

    ParseFailure failure() const noexcept { return failure_; }

private:
    ParseFailure failure_;
};

class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(std::size_t retained_so_far)
        : Error(ErrorKind::BudgetExhausted,
                "attempt budget exhausted with " + std::to_string(retained_so_far) +
                    " divergent pairs retained"),
          retained_(retained_so_far) {}

    std::size_t retained_so_far() const noexcept { return retained_; }

private:
    std::size_t retained_;
};

}  // namespace bias_forge
