#include "forge/errors.hpp"

namespace forge {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::idempotency:
      return "idempotency";
    case Axiom::invertibility:
      return "invertibility";
    case Axiom::distributivity:
      return "distributivity";
  }
  return "unknown";
}

AxiomViolation::AxiomViolation(Axiom k, std::array<int, 3> w)
    : Error("quandle axiom violated: " + to_string(k) + " at (" + std::to_string(w[0]) + ", " +
            std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")"),
      kind(k),
      witness(w) {}

GroupTooLarge::GroupTooLarge(std::size_t c)
    : Error("permutation group exceeds element cap " + std::to_string(c)), cap(c) {}

NotACocycle::NotACocycle(std::array<int, 3> w, bool diag)
    : Error(diag ? "not a cocycle: nonzero diagonal at x=" + std::to_string(w[0])
                 : "not a cocycle: identity fails at (" + std::to_string(w[0]) + ", " +
                       std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")"),
      witness(w),
      diagonal(diag) {}

DNotDividesModulus::DNotDividesModulus(int d, int modulus)
    : Error(std::to_string(d) + " does not divide modulus " + std::to_string(modulus)) {}

Capped::Capped(std::size_t max)
    : Error("coset enumeration exceeded " + std::to_string(max) + " cosets"), max_cosets(max) {}

ExtensionLawFails::ExtensionLawFails(std::array<int, 4> w)
    : Error("extension law fails at levels (" + std::to_string(w[0]) + ", " +
            std::to_string(w[1]) + ") over (" + std::to_string(w[2]) + ", " +
            std::to_string(w[3]) + ")"),
      witness(w) {}

}  // namespace forge
