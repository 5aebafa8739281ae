#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsb {

enum class ErrorKind {
    ZeroDenominator,
    NegativeInput,
    BothZero,
    Overflow,
    LimitExceeded,
    NotInRow,
    Endpoint,
    OutOfRange,
    NotCoprime,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::NegativeInput: return "NegativeInput";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::NotInRow: return "NotInRow";
        case ErrorKind::Endpoint: return "Endpoint";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace fsb
