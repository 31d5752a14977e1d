#ifndef FPL_IDERIV_HPP
#define FPL_IDERIV_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpl/formula.hpp"

namespace fpl {

// The systems on i-formulas: I1 has the basic i-rules only, I2 adds the
// gamma-indexed reflexivity axiom.
struct ISystem {
  static ISystem I1() { return {}; }
  static ISystem I2(Formula g) {
    ISystem s;
    s.gamma = std::move(g);
    return s;
  }
  std::optional<Formula> gamma;
  bool is_i2() const { return gamma.has_value(); }
};

enum class IRule : uint8_t { Assumption, IA, ICut, IAndL1, IAndL2, IAndR, GammaRefl, IMacro };
enum class IMacroName : uint8_t { IMon, ICut1, ICut2, Mon };

struct IMacroParams {
  IMacroName name = IMacroName::Mon;
  // schema sets; side is Theta for ICut1 and Delta for ICut2
  FormulaSet d1, t1, d2, t2, side;
};

// A proof tree for the i-calculi. Assumption leaves are the open premises;
// the structural rules (A)/(Cut) are realized by leaves and tree wiring.
struct IDerivation {
  IFormula conclusion;
  IRule rule = IRule::Assumption;
  std::optional<Formula> cut;                      // ICut
  std::vector<std::pair<Formula, Formula>> pairs;  // GammaRefl
  std::optional<IMacroParams> macro;               // IMacro
  std::vector<IDerivation> premises;

  static IDerivation assume(IFormula f) { return {std::move(f), IRule::Assumption}; }
  static IDerivation ia(IFormula f) { return {std::move(f), IRule::IA}; }
  static IDerivation icut(Formula phi, IDerivation left, IDerivation right, IFormula conclusion);
  static IDerivation and_l1(Formula phi, Formula psi);
  static IDerivation and_l2(Formula phi, Formula psi);
  static IDerivation and_r(Formula phi, Formula psi);
  static IDerivation gamma_refl(std::vector<std::pair<Formula, Formula>> pairs, const Formula& gamma);
};

struct ICheckResult {
  bool ok = true;
  std::string reason;
  std::string path;  // premises[i].premises[j]... of the failing node
  IFormulaSet assumptions;
};

ICheckResult check_ideriv(const IDerivation& d, const ISystem& system);

// Derived-rule expansion into basic i-rules plus Assumption leaves for the
// schema's premises; throws std::invalid_argument on malformed parameters.
// Mon passes its single premise tree through unchanged.
IDerivation expand_imacro(const IMacroParams& params, std::vector<IDerivation> premises = {});

}  // namespace fpl

#endif
