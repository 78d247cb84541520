#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace forge {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Axiom { idempotency, invertibility, distributivity };

std::string to_string(Axiom axiom);

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom kind, std::array<int, 3> witness);
  Axiom kind;
  std::array<int, 3> witness;  // unused slots are -1
};

class GroupTooLarge : public Error {
 public:
  explicit GroupTooLarge(std::size_t cap);
  std::size_t cap;
};

class NotEpimorphism : public Error {
 public:
  using Error::Error;
};

class NotACovering : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  // A diagonal failure carries (x, x, -1).
  NotACocycle(std::array<int, 3> witness, bool diagonal);
  std::array<int, 3> witness;
  bool diagonal;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class DNotDividesModulus : public Error {
 public:
  DNotDividesModulus(int d, int modulus);
};

class Capped : public Error {
 public:
  explicit Capped(std::size_t max_cosets);
  std::size_t max_cosets;
};

class NotAKnot : public Error {
 public:
  using Error::Error;
};

class BadGenerator : public Error {
 public:
  using Error::Error;
};

class FiberMismatch : public Error {
 public:
  using Error::Error;
};

class NotIndex2 : public Error {
 public:
  using Error::Error;
};

class ExtensionLawFails : public Error {
 public:
  // (level a, level b, x, z) at which the lifted product disagrees.
  explicit ExtensionLawFails(std::array<int, 4> witness);
  std::array<int, 4> witness;
};

// Raised when a proved statement fails on concrete data: always a bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace forge
