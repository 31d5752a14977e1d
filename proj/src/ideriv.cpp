#include "fpl/ideriv.hpp"

#include <algorithm>

namespace fpl {
namespace {

FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

FormulaSet set_minus(const FormulaSet& a, const Formula& f) {
  FormulaSet out = a;
  out.erase(f);
  return out;
}

bool intersects(const FormulaSet& a, const FormulaSet& b) {
  return std::ranges::any_of(a, [&](const Formula& f) { return b.count(f) > 0; });
}

Formula spine(const std::vector<std::pair<Formula, Formula>>& pairs, const Formula& gamma) {
  Formula acc = gamma;
  for (size_t i = pairs.size(); i-- > 0;)
    acc = Formula::disj(Formula::imp(pairs[i].first, pairs[i].second), acc);
  return acc;
}

struct Checker {
  const ISystem& system;
  ICheckResult result;

  bool fail(const std::string& reason, const std::string& path) {
    result.ok = false;
    result.reason = reason;
    result.path = path;
    return false;
  }

  bool check(const IDerivation& d, const std::string& path) {
    switch (d.rule) {
      case IRule::Assumption:
        if (!d.premises.empty()) return fail("assumption leaves take no premises", path);
        result.assumptions.insert(d.conclusion);
        return true;

      case IRule::IA:
        if (!d.premises.empty()) return fail("(i-A) takes no premises", path);
        if (!intersects(d.conclusion.ante(), d.conclusion.succ()))
          return fail("(i-A) requires a shared formula between the sides", path);
        return true;

      case IRule::ICut: {
        if (d.premises.size() != 2) return fail("(i-Cut) takes two premises", path);
        if (!d.cut) return fail("(i-Cut) requires the cut formula", path);
        const Formula& phi = *d.cut;
        const IFormula& l = d.premises[0].conclusion;
        const IFormula& r = d.premises[1].conclusion;
        if (l.succ().count(phi) == 0)
          return fail("cut formula missing from the left premise succedents", path);
        if (r.ante().count(phi) == 0)
          return fail("cut formula missing from the right premise antecedents", path);
        bool match = false;
        for (bool drop_l : {true, false})
          for (bool drop_r : {true, false}) {
            FormulaSet ante = set_union(l.ante(), drop_r ? set_minus(r.ante(), phi) : r.ante());
            FormulaSet succ = set_union(drop_l ? set_minus(l.succ(), phi) : l.succ(), r.succ());
            if (!ante.empty() && !succ.empty() &&
                d.conclusion == IFormula(std::move(ante), std::move(succ)))
              match = true;
          }
        if (!match) return fail("(i-Cut) conclusion does not match the premises", path);
        return check(d.premises[0], path + ".premises[0]") &&
               check(d.premises[1], path + ".premises[1]");
      }

      case IRule::IAndL1:
      case IRule::IAndL2: {
        if (!d.premises.empty()) return fail("(i-&L) takes no premises", path);
        if (d.conclusion.ante().size() != 1 || d.conclusion.succ().size() != 1)
          return fail("(i-&L) has singleton sides", path);
        const Formula& a = *d.conclusion.ante().begin();
        if (!a.is(Formula::Kind::And)) return fail("(i-&L) antecedent must be a conjunction", path);
        Formula want = d.rule == IRule::IAndL1 ? a.lhs() : a.rhs();
        if (*d.conclusion.succ().begin() != want)
          return fail("(i-&L) succedent must be the matching conjunct", path);
        return true;
      }

      case IRule::IAndR: {
        if (!d.premises.empty()) return fail("(i-&R) takes no premises", path);
        if (d.conclusion.succ().size() != 1)
          return fail("(i-&R) has a singleton succedent", path);
        const Formula& c = *d.conclusion.succ().begin();
        if (!c.is(Formula::Kind::And)) return fail("(i-&R) succedent must be a conjunction", path);
        if (d.conclusion.ante() != FormulaSet{c.lhs(), c.rhs()})
          return fail("(i-&R) antecedents must be the two conjuncts", path);
        return true;
      }

      case IRule::GammaRefl: {
        if (!system.is_i2()) return fail("(gamma-Refl) is only available in I2", path);
        if (!d.premises.empty()) return fail("(gamma-Refl) takes no premises", path);
        if (d.pairs.empty()) return fail("(gamma-Refl) requires n >= 1 pairs", path);
        FormulaSet ante, succ;
        for (const auto& [p, q] : d.pairs) {
          ante.insert(p);
          succ.insert(q);
        }
        ante.insert(spine(d.pairs, *system.gamma));
        if (d.conclusion != IFormula(std::move(ante), std::move(succ)))
          return fail("(gamma-Refl) conclusion does not match the pairs", path);
        return true;
      }

      case IRule::IMacro: {
        if (!d.macro) return fail("macro node without parameters", path);
        std::optional<IDerivation> expansion;
        try {
          expansion = expand_imacro(*d.macro, d.premises);
        } catch (const std::invalid_argument& e) {
          return fail(std::string("malformed macro parameters: ") + e.what(), path);
        }
        if (!(expansion->conclusion == d.conclusion))
          return fail("macro expansion concludes a different i-formula", path);
        return check(*expansion, path + ".expansion");
      }
    }
    return fail("unknown rule", path);
  }
};

}  // namespace

IDerivation IDerivation::icut(Formula phi, IDerivation left, IDerivation right,
                              IFormula conclusion) {
  IDerivation d{std::move(conclusion), IRule::ICut};
  d.cut = std::move(phi);
  d.premises.push_back(std::move(left));
  d.premises.push_back(std::move(right));
  return d;
}

IDerivation IDerivation::and_l1(Formula phi, Formula psi) {
  Formula c = Formula::conj(phi, psi);
  return {IFormula({c}, {std::move(phi)}), IRule::IAndL1};
}

IDerivation IDerivation::and_l2(Formula phi, Formula psi) {
  Formula c = Formula::conj(phi, psi);
  return {IFormula({c}, {std::move(psi)}), IRule::IAndL2};
}

IDerivation IDerivation::and_r(Formula phi, Formula psi) {
  Formula c = Formula::conj(phi, psi);
  return {IFormula({phi, psi}, {c}), IRule::IAndR};
}

IDerivation IDerivation::gamma_refl(std::vector<std::pair<Formula, Formula>> pairs,
                                    const Formula& gamma) {
  FormulaSet ante, succ;
  for (const auto& [p, q] : pairs) {
    ante.insert(p);
    succ.insert(q);
  }
  ante.insert(spine(pairs, gamma));
  IDerivation d{IFormula(std::move(ante), std::move(succ)), IRule::GammaRefl};
  d.pairs = std::move(pairs);
  return d;
}

ICheckResult check_ideriv(const IDerivation& d, const ISystem& system) {
  Checker c{system};
  c.check(d, "root");
  if (!c.result.ok) c.result.assumptions.clear();
  return c.result;
}

IDerivation expand_imacro(const IMacroParams& params, std::vector<IDerivation> premises) {
  switch (params.name) {
    case IMacroName::Mon: {
      if (premises.size() != 1) throw std::invalid_argument("Mon takes one premise tree");
      return premises[0];
    }

    case IMacroName::IMon: {
      // d1 => t1 derives d2 => t2 when d1 <= d2 and t1 <= t2
      const auto &d1 = params.d1, &t1 = params.t1, &d2 = params.d2, &t2 = params.t2;
      if (!std::ranges::includes(d2, d1) || !std::ranges::includes(t2, t1))
        throw std::invalid_argument("IMon requires inclusions d1 <= d2, t1 <= t2");
      if (d1.empty() || t1.empty()) throw std::invalid_argument("IMon sides must be non-empty");
      Formula phi = *t1.begin();
      IDerivation left = IDerivation::assume(IFormula(d1, t1));
      IDerivation right = IDerivation::ia(IFormula(set_union(d2, {phi}), set_union(t2, {phi})));
      return IDerivation::icut(phi, std::move(left), std::move(right), IFormula(d2, t2));
    }

    case IMacroName::ICut1: {
      // {d1 => t1 u Theta} plus {d2 u {p} => t2 | p in Theta} derives d1 u d2 => t1 u t2
      const auto& theta = params.side;
      if (theta.empty()) throw std::invalid_argument("ICut1 requires a non-empty Theta");
      IDerivation cur = IDerivation::assume(IFormula(params.d1, set_union(params.t1, theta)));
      for (const auto& p : theta) {
        IDerivation side = IDerivation::assume(IFormula(set_union(params.d2, {p}), params.t2));
        FormulaSet ante = set_union(cur.conclusion.ante(), params.d2);
        FormulaSet succ = params.t1.count(p) ? cur.conclusion.succ()
                                             : set_minus(cur.conclusion.succ(), p);
        succ = set_union(succ, params.t2);
        cur = IDerivation::icut(p, std::move(cur), std::move(side),
                                IFormula(std::move(ante), std::move(succ)));
      }
      return cur;
    }

    case IMacroName::ICut2: {
      // {d1 => t1 u {phi} | phi in Delta} plus {d2 u Delta => t2} derives d1 u d2 => t1 u t2
      const auto& delta = params.side;
      if (delta.empty()) throw std::invalid_argument("ICut2 requires a non-empty Delta");
      IDerivation cur = IDerivation::assume(IFormula(set_union(params.d2, delta), params.t2));
      for (const auto& phi : delta) {
        IDerivation side = IDerivation::assume(IFormula(params.d1, set_union(params.t1, {phi})));
        FormulaSet ante = params.d2.count(phi) ? cur.conclusion.ante()
                                               : set_minus(cur.conclusion.ante(), phi);
        ante = set_union(ante, params.d1);
        FormulaSet succ = set_union(cur.conclusion.succ(), params.t1);
        cur = IDerivation::icut(phi, std::move(side), std::move(cur),
                                IFormula(std::move(ante), std::move(succ)));
      }
      return cur;
    }
  }
  throw std::invalid_argument("unknown i-macro");
}

}  // namespace fpl
