#pragma once

#include <stdexcept>
#include <string>

namespace cmhecke {

struct NotFundamentalError : std::domain_error {
    explicit NotFundamentalError(long long D)
        : std::domain_error("-" + std::to_string(D) + " is not a fundamental discriminant") {}
};

// D = 3 or 4: the unit group is larger than {+-1} and the simplest-character
// machinery does not apply.
struct SpecialDiscriminantError : std::domain_error {
    explicit SpecialDiscriminantError(long long D)
        : std::domain_error("D = " + std::to_string(D) + " is a special discriminant (extra units)") {}
};

struct InvalidPrimeError : std::invalid_argument {
    InvalidPrimeError(long long p, long long D)
        : std::invalid_argument("p = " + std::to_string(p) + " does not divide D = " + std::to_string(D)) {}
};

struct NotCoprimeError : std::domain_error {
    explicit NotCoprimeError(const std::string& what) : std::domain_error(what) {}
};

struct WrongCaseError : std::logic_error {
    explicit WrongCaseError(const std::string& what) : std::logic_error(what) {}
};

struct MissingValueError : std::invalid_argument {
    explicit MissingValueError(const std::string& what) : std::invalid_argument(what) {}
};

struct BadPrimeError : std::invalid_argument {
    explicit BadPrimeError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotOddError : std::domain_error {
    explicit NotOddError(const std::string& what) : std::domain_error(what) {}
};

struct WrongSignError : std::logic_error {
    explicit WrongSignError(const std::string& what) : std::logic_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cmhecke
