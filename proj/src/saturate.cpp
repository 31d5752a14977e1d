#include "fpl/saturate.hpp"

#include <algorithm>
#include <map>

namespace fpl {
namespace {

struct Fact {
  enum Kind : uint8_t { Premise, AndL1, AndL2, AndR, GRefl, Cut };
  IFormula formula;
  Kind kind;
  size_t left = 0, right = 0;                      // Cut premises
  std::optional<Formula> cut;                      // Cut formula
  std::vector<std::pair<Formula, Formula>> pairs;  // GRefl
};

struct Saturator {
  const ISystem& system;
  const FormulaSet& universe;
  size_t max_steps;

  std::vector<Fact> facts;
  std::map<IFormula, size_t> index;
  std::optional<size_t> hit;  // first fact subsuming the goal
  const IFormula* goal = nullptr;

  bool add(Fact f) {
    if (index.count(f.formula)) return false;
    index.emplace(f.formula, facts.size());
    if (!hit && std::ranges::includes(goal->ante(), f.formula.ante()) &&
        std::ranges::includes(goal->succ(), f.formula.succ()))
      hit = facts.size();
    facts.push_back(std::move(f));
    return true;
  }

  // Every cut between two stored facts, in both orientations.
  void cuts_into(size_t i, size_t j, std::vector<Fact>& out) const {
    const IFormula& l = facts[i].formula;
    const IFormula& r = facts[j].formula;
    for (const Formula& phi : l.succ()) {
      if (!r.ante().count(phi)) continue;
      FormulaSet ante = l.ante();
      for (const Formula& x : r.ante())
        if (x != phi) ante.insert(x);
      FormulaSet succ = r.succ();
      for (const Formula& x : l.succ())
        if (x != phi) succ.insert(x);
      out.push_back(Fact{IFormula(std::move(ante), std::move(succ)), Fact::Cut, i, j, phi, {}});
    }
  }

  IDerivation rebuild(size_t i) const {
    const Fact& f = facts[i];
    switch (f.kind) {
      case Fact::Premise: return IDerivation::assume(f.formula);
      case Fact::AndL1: return {f.formula, IRule::IAndL1};
      case Fact::AndL2: return {f.formula, IRule::IAndL2};
      case Fact::AndR: return {f.formula, IRule::IAndR};
      case Fact::GRefl: {
        IDerivation d{f.formula, IRule::GammaRefl};
        d.pairs = f.pairs;
        return d;
      }
      case Fact::Cut:
        return IDerivation::icut(*f.cut, rebuild(f.left), rebuild(f.right), f.formula);
    }
    throw std::logic_error("unreachable");
  }

  // The found fact may be a strict sub-i-formula of the goal; weaken it by
  // cutting against an (i-A) instance on one of its succedents.
  IDerivation rebuild_goal() const {
    IDerivation d = rebuild(*hit);
    if (d.conclusion == *goal) return d;
    Formula phi = *d.conclusion.succ().begin();
    FormulaSet ia_ante = goal->ante();
    ia_ante.insert(phi);
    FormulaSet ia_succ = goal->succ();
    ia_succ.insert(phi);
    return IDerivation::icut(phi, std::move(d),
                             IDerivation::ia(IFormula(std::move(ia_ante), std::move(ia_succ))),
                             *goal);
  }

  SaturateResult run(const IFormulaSet& premises) {
    SaturateResult res;
    auto finish = [&](SaturateStatus st) {
      res.status = st;
      res.steps = facts.size();
      if (st == SaturateStatus::Found) res.derivation = rebuild_goal();
      return res;
    };

    std::vector<Fact> seeds;
    for (const IFormula& p : premises)
      seeds.push_back(Fact{p, Fact::Premise});
    for (const Formula& f : universe) {
      if (!f.is(Formula::Kind::And)) continue;
      Formula a = f.lhs(), b = f.rhs();
      if (!universe.count(a) || !universe.count(b)) continue;  // custom, non-closed universe
      seeds.push_back(Fact{IFormula({f}, {a}), Fact::AndL1});
      seeds.push_back(Fact{IFormula({f}, {b}), Fact::AndL2});
      seeds.push_back(Fact{IFormula({a, b}, {f}), Fact::AndR});
    }
    if (system.is_i2())
      for (const Formula& theta : universe)
        for (const Decomposition& dec : decompose(theta, *system.gamma)) {
          bool inside = std::ranges::all_of(dec.pairs, [&](const auto& pr) {
            return universe.count(pr.first) && universe.count(pr.second);
          });
          if (!inside) continue;
          IDerivation ax = IDerivation::gamma_refl(dec.pairs, *system.gamma);
          seeds.push_back(Fact{ax.conclusion, Fact::GRefl, 0, 0, {}, dec.pairs});
        }

    size_t next = 0;
    std::vector<Fact> fresh = std::move(seeds);
    while (true) {
      for (Fact& f : fresh) {
        if (facts.size() >= max_steps) return finish(SaturateStatus::BudgetExhausted);
        add(std::move(f));
        if (hit) return finish(SaturateStatus::Found);
      }
      fresh.clear();
      if (next == facts.size()) break;
      size_t i = next++;
      for (size_t j = 0; j < facts.size(); ++j) {
        cuts_into(i, j, fresh);
        if (j != i) cuts_into(j, i, fresh);
      }
    }
    return finish(SaturateStatus::Saturated);
  }
};

void require_in_universe(const IFormula& f, const FormulaSet& universe) {
  for (const Formula& x : f.ante())
    if (!universe.count(x)) throw std::invalid_argument("i-formula member outside the universe");
  for (const Formula& x : f.succ())
    if (!universe.count(x)) throw std::invalid_argument("i-formula member outside the universe");
}

}  // namespace

FormulaSet default_universe(const IFormulaSet& premises, const IFormula& goal) {
  FormulaSet base;
  for (const IFormula& p : premises) {
    base.insert(p.ante().begin(), p.ante().end());
    base.insert(p.succ().begin(), p.succ().end());
  }
  base.insert(goal.ante().begin(), goal.ante().end());
  base.insert(goal.succ().begin(), goal.succ().end());
  return subformulas(base);
}

SaturateResult saturate(const IFormulaSet& premises, const IFormula& goal,
                        const ISystem& system, const FormulaSet& universe,
                        size_t max_steps) {
  for (const IFormula& p : premises) require_in_universe(p, universe);
  require_in_universe(goal, universe);

  Saturator s{system, universe, max_steps};
  s.goal = &goal;
  if (std::ranges::any_of(goal.ante(),
                          [&](const Formula& f) { return goal.succ().count(f) > 0; })) {
    SaturateResult res;
    res.status = SaturateStatus::Found;
    res.derivation = IDerivation::ia(goal);
    return res;
  }
  return s.run(premises);
}

}  // namespace fpl
