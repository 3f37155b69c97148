#pragma once

#include <stdexcept>
#include <string>

namespace cpg {

// Domain errors carry the name used throughout this library so callers can
// match on type rather than parse messages.

struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

struct BothZero : std::domain_error {
    BothZero() : std::domain_error("resultant of two zero polynomials") {}
};

struct EqualIndices : std::domain_error {
    EqualIndices() : std::domain_error("cyclotomic resultant needs distinct indices") {}
};

struct ZeroPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConstantPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

struct EmptyRow : std::invalid_argument {
    EmptyRow() : std::invalid_argument("circulant needs a nonempty first row") {}
};

struct SyntaxError : std::invalid_argument {
    SyntaxError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          pos(position) {}
    std::size_t pos;
};

struct EmptyWord : std::invalid_argument {
    EmptyWord() : std::invalid_argument("defining word must have at least one letter") {}
};

struct DanglingReference : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroRepresenter : std::domain_error {
    ZeroRepresenter() : std::domain_error("representer polynomial is zero") {}
};

struct HypothesisViolated : std::domain_error {
    using std::domain_error::domain_error;
};

struct BadCongruence : std::domain_error {
    using std::domain_error::domain_error;
};

struct EqualRS : std::domain_error {
    EqualRS() : std::domain_error("r and s must differ") {}
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cpg
