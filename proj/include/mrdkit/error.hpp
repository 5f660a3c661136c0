#ifndef MRDKIT_ERROR_HPP
#define MRDKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrdkit {

enum class ErrorKind {
    NonPrime,
    ReducibleModulus,
    DegreeMismatch,
    ZeroInverse,
    ContextMismatch,
    NonDivisorDegree,
    SingularMap,
    BadParams,
    TooLarge,
    NonIntegralK,
    DependentAnchors,
    BadWitnessShape,
    OutOfTheoremRange,
    BudgetExceeded,
    NoFullRankWord,
    SingularWitness,
    ParseError,
    ConstraintError,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NonDivisorDegree: return "NonDivisorDegree";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonIntegralK: return "NonIntegralK";
    case ErrorKind::DependentAnchors: return "DependentAnchors";
    case ErrorKind::BadWitnessShape: return "BadWitnessShape";
    case ErrorKind::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoFullRankWord: return "NoFullRankWord";
    case ErrorKind::SingularWitness: return "SingularWitness";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConstraintError: return "ConstraintError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace mrdkit

#endif // MRDKIT_ERROR_HPP
