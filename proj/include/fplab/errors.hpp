#pragma once

#include <stdexcept>
#include <string>

namespace fplab {

// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing residues or sets that live over different moduli.
class ModulusMismatch : public Error {
public:
  explicit ModulusMismatch(const std::string& msg) : Error(msg) {}
};

// Argument outside an operation's domain: inverse of zero, dilation by zero,
// a ratio set over {0}, subgroup order not dividing p-1, and the like.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Malformed set file or experiment config.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A requested construction would exceed the configured memory budget.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// A structural hypothesis fails: Q is not Gamma-invariant, Gamma is not a
// subgroup. These are hard errors, not reportable ratios.
class InvarianceError : public Error {
public:
  explicit InvarianceError(const std::string& msg) : Error(msg) {}
};

}  // namespace fplab
