#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dedekind {

enum class ErrorKind {
    NotCoprime,
    ModuliNotCoprime,
    NotOddPrime,
    NonPositiveQ,
    NotSquareFree,
    BadEps,
    HypothesisViolated,
    RangeViolated,
    IneligiblePrime,
    DuplicatePrime,
    OutOfRange,
    Overflow,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ModuliNotCoprime: return "ModuliNotCoprime";
        case ErrorKind::NotOddPrime: return "NotOddPrime";
        case ErrorKind::NonPositiveQ: return "NonPositiveQ";
        case ErrorKind::NotSquareFree: return "NotSquareFree";
        case ErrorKind::BadEps: return "BadEps";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::RangeViolated: return "RangeViolated";
        case ErrorKind::IneligiblePrime: return "IneligiblePrime";
        case ErrorKind::DuplicatePrime: return "DuplicatePrime";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

/// Every precondition failure in the library is reported as an Error whose
/// kind identifies the violated contract and whose message names the detail
/// (the offending gcd, the failed hypothesis, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dedekind
