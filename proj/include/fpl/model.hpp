#ifndef FPL_MODEL_HPP
#define FPL_MODEL_HPP

#include <map>

#include "fpl/formula.hpp"
#include "fpl/frame.hpp"

namespace fpl {

// A frame with a valuation. Letters absent from the map default to
// bot_F = box(empty). A valid model maps every letter to a closure fixpoint.
struct Model {
  FiniteFrame frame;
  std::map<unsigned, WorldSet> valuation;

  WorldSet letter_value(unsigned index) const {
    auto it = valuation.find(index);
    return it != valuation.end() ? it->second : box(frame, WorldSet::empty(frame.size()));
  }
};

struct ValidationReport {
  // letters whose valuation is not a box-pre fixpoint
  std::vector<unsigned> bad_letters;
  bool ok() const { return bad_letters.empty(); }
};

ValidationReport validate_model(const Model& m);

// Truth set of a formula. Defined for any valuation; only validated models
// are box-pre models in the semantic sense.
WorldSet eval(const Model& m, const Formula& f);

// -||/\ante|| u ||\/succ||
WorldSet eval_iformula(const Model& m, const IFormula& f);

bool holds_at(const Model& m, const Formula& f, int world);
// ||lhs|| subset of ||rhs||
bool sequent_holds(const Model& m, const Formula& lhs, const Formula& rhs);

}  // namespace fpl

#endif
