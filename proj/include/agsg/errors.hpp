#ifndef AGSG_ERRORS_HPP
#define AGSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace agsg {

// Exit-code categories used by the CLI: usage errors map to 2,
// resource/cap errors to 3, verification failures to 1.

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : DomainError {
    explicit DivisionByZero(const std::string& msg) : DomainError(msg) {}
};

// A cap was exhausted before the answer could be decided.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PrecisionUndecided : ResourceError {
    explicit PrecisionUndecided(const std::string& msg) : ResourceError(msg) {}
};

struct SearchExhausted : ResourceError {
    explicit SearchExhausted(const std::string& msg) : ResourceError(msg) {}
};

struct PoolInsufficient : ResourceError {
    explicit PoolInsufficient(const std::string& msg) : ResourceError(msg) {}
};

struct BoxTooSmall : ResourceError {
    explicit BoxTooSmall(const std::string& msg) : ResourceError(msg) {}
};

struct TooLarge : ResourceError {
    explicit TooLarge(const std::string& msg) : ResourceError(msg) {}
};

// A structural guarantee failed; indicates a backend bug, not bad input.
struct AxiomViolated : std::runtime_error {
    explicit AxiomViolated(const std::string& msg) : std::runtime_error(msg) {}
};

struct LemmaViolated : AxiomViolated {
    explicit LemmaViolated(const std::string& msg) : AxiomViolated(msg) {}
};

struct EvaluationFailed : std::runtime_error {
    explicit EvaluationFailed(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : EvaluationFailed {
    explicit PoleError(const std::string& msg) : EvaluationFailed(msg) {}
};

struct ParseError : DomainError {
    explicit ParseError(const std::string& msg) : DomainError(msg) {}
};

}  // namespace agsg

#endif
