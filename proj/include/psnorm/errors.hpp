#pragma once

#include <stdexcept>
#include <string>

namespace psnorm {

/// Division by a series whose constant term is (numerically) zero.
struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// An operation that requires a vanishing constant term was given one that does not vanish.
struct NonzeroConstantTerm : std::domain_error {
    explicit NonzeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// Closed-form evaluation requested at a pole of the expression.
struct PoleAtPoint : std::domain_error {
    explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

/// No sharpness witness exists for the requested (family, kind) pair.
struct NoWitness : std::domain_error {
    explicit NoWitness(const std::string& what) : std::domain_error(what) {}
};

/// Argument outside the stated domain of a probe or root finder.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The radicand of H1/H2 is negative (alpha outside [-3/2, 1]).
struct NegativeRadicand : std::domain_error {
    explicit NegativeRadicand(const std::string& what) : std::domain_error(what) {}
};

/// The quadratic-root branch is only defined for s > 0.
struct OutOfBranch : std::domain_error {
    explicit OutOfBranch(const std::string& what) : std::domain_error(what) {}
};

/// Bisection found no sign change on the bracket.
struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& what) : std::runtime_error(what) {}
};

} // namespace psnorm
