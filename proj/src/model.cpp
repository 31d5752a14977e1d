#include "fpl/model.hpp"

namespace fpl {

ValidationReport validate_model(const Model& m) {
  ValidationReport report;
  for (const auto& [idx, ws] : m.valuation) {
    if (ws.size() != m.frame.size() || !is_fixpoint(m.frame, ws))
      report.bad_letters.push_back(idx);
  }
  return report;
}

WorldSet eval(const Model& m, const Formula& f) {
  const FiniteFrame& fr = m.frame;
  switch (f.kind()) {
    case Formula::Kind::Bot:
      return box(fr, WorldSet::empty(fr.size()));
    case Formula::Kind::Letter:
      return m.letter_value(f.index());
    case Formula::Kind::And:
      return eval(m, f.lhs()) & eval(m, f.rhs());
    case Formula::Kind::Or:
      return closure(fr, eval(m, f.lhs()) | eval(m, f.rhs()));
    case Formula::Kind::Imp:
      return box(fr, ~eval(m, f.lhs()) | eval(m, f.rhs()));
  }
  throw std::logic_error("unreachable");
}

WorldSet eval_iformula(const Model& m, const IFormula& f) {
  WorldSet ante = WorldSet::full(m.frame.size());
  for (const auto& g : f.ante()) ante = ante & eval(m, g);
  WorldSet succ = eval(m, fold_or(f.succ()));
  return ~ante | succ;
}

bool holds_at(const Model& m, const Formula& f, int world) {
  return eval(m, f).contains(world);
}

bool sequent_holds(const Model& m, const Formula& lhs, const Formula& rhs) {
  return eval(m, lhs).subset_of(eval(m, rhs));
}

}  // namespace fpl
