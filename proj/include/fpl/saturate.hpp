#ifndef FPL_SATURATE_HPP
#define FPL_SATURATE_HPP

#include <optional>

#include "fpl/ideriv.hpp"

namespace fpl {

// Bounded forward closure of an i-formula set under the basic i-rules (plus
// gamma-Refl instances in I2), with every produced i-formula's member
// formulas restricted to the universe. Not a decision procedure: a negative
// answer distinguishes a genuinely complete closure from a spent budget.
enum class SaturateStatus : uint8_t { Found, Saturated, BudgetExhausted };

struct SaturateResult {
  SaturateStatus status = SaturateStatus::Saturated;
  std::optional<IDerivation> derivation;  // Found only; checks with assumptions among premises
  size_t steps = 0;                       // i-formulas added to the store

  bool found() const { return status == SaturateStatus::Found; }
};

// The default search space: the subformula closure of everything mentioned.
FormulaSet default_universe(const IFormulaSet& premises, const IFormula& goal);

// Throws std::invalid_argument if a premise or goal member formula lies
// outside the universe.
SaturateResult saturate(const IFormulaSet& premises, const IFormula& goal,
                        const ISystem& system, const FormulaSet& universe,
                        size_t max_steps = 10000);

inline SaturateResult saturate(const IFormulaSet& premises, const IFormula& goal,
                               const ISystem& system, size_t max_steps = 10000) {
  return saturate(premises, goal, system, default_universe(premises, goal), max_steps);
}

}  // namespace fpl

#endif
