#ifndef FPL_DERIVATION_HPP
#define FPL_DERIVATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpl/formula.hpp"
#include "fpl/ideriv.hpp"

namespace fpl {

struct Sequent {
  Formula lhs, rhs;
  bool operator==(const Sequent&) const = default;
};

enum class System : uint8_t { K, F1, F2 };

enum class Rule : uint8_t {
  A, Cut, Bot, AndR, AndL1, AndL2, OrR1, OrR2, OrL,
  DT0, ImpAnd, ImpTr, ImpOrS,
  Abs, DNI, Refl1, Refl2, Prop1, Prop2, Macro
};

enum class MacroName : uint8_t { Mon, Top, ImpRefl, AndImpAnd, NegAntitone };

// Parameter lists for the schema rules with n-ary folds ((->-\/.s), Refl).
// Schemas are reconstructed as right-nested folds of these explicit lists.
struct SchemaParams {
  std::vector<Formula> alphas, betas, psis;
  std::optional<Formula> chi;
};

struct MacroParams {
  MacroName name = MacroName::Top;
  std::vector<Formula> formulas;   // Mon: Gamma; AndImpAnd: interleaved alpha/beta
  std::vector<Formula> formulas2;  // Mon: Gamma0
  std::optional<Formula> a, b;     // ImpRefl: phi/chi; Top: chi in a; NegAntitone: alpha/beta
};

struct Derivation;

// A compactness witness for the Prop rules: a theorem of the conclusion's
// antecedent together with its derivation.
struct PropWitness {
  Formula formula;
  std::unique_ptr<Derivation> derivation;  // concludes alpha |- formula
};

struct PropIPremise {
  size_t witness = 0;                              // index into witnesses
  std::vector<std::pair<Formula, Formula>> pairs;  // the decomposition used
};

struct Derivation {
  Sequent conclusion;
  Rule rule = Rule::A;
  std::optional<SchemaParams> schema;
  std::optional<MacroParams> macro;
  std::vector<Derivation> premises;
  // Prop nodes only
  std::vector<PropWitness> prop_witnesses;
  std::vector<PropIPremise> prop_i_premises;
  std::unique_ptr<IDerivation> prop_i_derivation;  // concludes {top} => {bot}

  Derivation() : conclusion{Formula::bot(), Formula::bot()} {}
  Derivation(Sequent c, Rule r) : conclusion(std::move(c)), rule(r) {}
  Derivation(Derivation&&) = default;
  Derivation& operator=(Derivation&&) = default;
  Derivation(const Derivation&);
  Derivation& operator=(const Derivation&);
};

struct CheckResult {
  bool ok = true;
  std::string reason;
  std::string path;
};

CheckResult check_derivation(const Derivation& d, System system);

// Expands a derived rule into basic rules; the result passes check_derivation
// in system K (given that any embedded premise trees do). Throws
// std::invalid_argument on malformed parameters.
Derivation expand_macro(const MacroParams& params, std::vector<Derivation> premises = {});

// The lifting of |- to finite premise sets: accepts iff gamma0 is an
// order-preserving sublist of gamma, d concludes /\gamma0 |- alpha
// (with /\{} = top) and d checks in the system.
CheckResult check_set_consequence(const std::vector<Formula>& gamma, const Formula& alpha,
                                  const std::vector<Formula>& gamma0, const Derivation& d,
                                  System system);

// Building blocks used by certificates and macro expansions.
Derivation d_axiom(Formula f);
Derivation d_cut(Derivation left, Derivation right);
Derivation d_and_r(Derivation left, Derivation right);
Derivation d_dt0(Formula chi, Derivation premise);
Derivation d_imp_tr(Formula a, Formula b, Formula c);
Derivation d_imp_and(Formula a, Formula b, Formula c);
// fold_and(list) |- list[i] via AndL projections
Derivation d_project(const std::vector<Formula>& list, size_t i);

}  // namespace fpl

#endif
