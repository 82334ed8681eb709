#pragma once

#include <stdexcept>
#include <string>

namespace unitary_radon {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidTuple : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A pole or vanishing denominator was hit.
class SingularError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input violates a precondition of an operation (not harmonic, not h-monogenic, ...).
class ContractViolation : public std::invalid_argument {
public:
    ContractViolation(const std::string& what, double residual)
        : std::invalid_argument(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    explicit ContractViolation(const std::string& what)
        : std::invalid_argument(what), residual_(0.0) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

}  // namespace unitary_radon
