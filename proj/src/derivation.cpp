#include "fpl/derivation.hpp"

namespace fpl {
namespace {

Formula spine_or(const std::vector<std::pair<Formula, Formula>>& pairs, const Formula& gamma) {
  Formula acc = gamma;
  for (size_t i = pairs.size(); i-- > 0;)
    acc = Formula::disj(Formula::imp(pairs[i].first, pairs[i].second), acc);
  return acc;
}

bool rule_available(Rule r, System s) {
  switch (r) {
    case Rule::Abs:
    case Rule::Prop1:
      return s == System::F1;
    case Rule::DNI:
      return s == System::F1 || s == System::F2;
    case Rule::Refl1:
    case Rule::Refl2:
    case Rule::Prop2:
      return s == System::F2;
    default:
      return true;  // basic rules and macros are available everywhere
  }
}

struct SchemaLists {
  std::vector<Formula> imps;       // alpha_j -> beta_j
  std::vector<Formula> psi_betas;  // psi_j & beta_j
  std::vector<Formula> psi_alphas; // psi_j & alpha_j
};

SchemaLists build_lists(const SchemaParams& p) {
  SchemaLists out;
  for (size_t j = 0; j < p.alphas.size(); ++j) {
    out.imps.push_back(Formula::imp(p.alphas[j], p.betas[j]));
    out.psi_betas.push_back(Formula::conj(p.psis[j], p.betas[j]));
    out.psi_alphas.push_back(Formula::conj(p.psis[j], p.alphas[j]));
  }
  return out;
}

struct Checker {
  System system;
  CheckResult result;

  bool fail(const std::string& reason, const std::string& path) {
    result.ok = false;
    result.reason = reason;
    result.path = path;
    return false;
  }

  bool check_premises(const Derivation& d, const std::string& path) {
    for (size_t i = 0; i < d.premises.size(); ++i)
      if (!check(d.premises[i], path + ".premises[" + std::to_string(i) + "]")) return false;
    return true;
  }

  bool arity(const Derivation& d, size_t n, const std::string& path) {
    if (d.premises.size() != n)
      return fail("rule takes " + std::to_string(n) + " premises", path);
    return true;
  }

  bool schema_ok(const Derivation& d, const std::string& path, bool need_chi) {
    if (!d.schema) return fail("schema rule without parameter lists", path);
    const auto& p = *d.schema;
    size_t n = p.alphas.size();
    if (n == 0 || p.betas.size() != n || p.psis.size() != n)
      return fail("schema lists must be non-empty and of equal length", path);
    if (need_chi && !p.chi) return fail("schema requires chi", path);
    return true;
  }

  bool check(const Derivation& d, const std::string& path) {
    if (!rule_available(d.rule, system)) return fail("rule unavailable in this system", path);
    const Sequent& c = d.conclusion;
    switch (d.rule) {
      case Rule::A:
        if (!arity(d, 0, path)) return false;
        if (!(c.lhs == c.rhs)) return fail("(A) concludes alpha |- alpha", path);
        return true;

      case Rule::Cut: {
        if (!arity(d, 2, path)) return false;
        const Sequent& l = d.premises[0].conclusion;
        const Sequent& r = d.premises[1].conclusion;
        if (!(l.lhs == c.lhs) || !(l.rhs == r.lhs) || !(r.rhs == c.rhs))
          return fail("(Cut) premises do not compose to the conclusion", path);
        return check_premises(d, path);
      }

      case Rule::Bot:
        if (!arity(d, 0, path)) return false;
        if (!c.lhs.is(Formula::Kind::Bot)) return fail("(bot) concludes bot |- alpha", path);
        return true;

      case Rule::AndR: {
        if (!arity(d, 2, path)) return false;
        const Sequent& l = d.premises[0].conclusion;
        const Sequent& r = d.premises[1].conclusion;
        if (!(l.lhs == c.lhs) || !(r.lhs == c.lhs) ||
            !(c.rhs == Formula::conj(l.rhs, r.rhs)))
          return fail("(&R) conclusion must conjoin the premise succedents", path);
        return check_premises(d, path);
      }

      case Rule::AndL1:
      case Rule::AndL2: {
        if (!arity(d, 0, path)) return false;
        if (!c.lhs.is(Formula::Kind::And))
          return fail("(&L) antecedent must be a conjunction", path);
        Formula want = d.rule == Rule::AndL1 ? c.lhs.lhs() : c.lhs.rhs();
        if (!(c.rhs == want)) return fail("(&L) succedent must be the matching conjunct", path);
        return true;
      }

      case Rule::OrR1:
      case Rule::OrR2: {
        if (!arity(d, 0, path)) return false;
        if (!c.rhs.is(Formula::Kind::Or))
          return fail("(|R) succedent must be a disjunction", path);
        Formula want = d.rule == Rule::OrR1 ? c.rhs.lhs() : c.rhs.rhs();
        if (!(c.lhs == want)) return fail("(|R) antecedent must be the matching disjunct", path);
        return true;
      }

      case Rule::OrL: {
        if (!arity(d, 2, path)) return false;
        const Sequent& l = d.premises[0].conclusion;
        const Sequent& r = d.premises[1].conclusion;
        if (!(c.lhs == Formula::disj(l.lhs, r.lhs)) || !(l.rhs == c.rhs) || !(r.rhs == c.rhs))
          return fail("(|L) conclusion must case-split the premise antecedents", path);
        return check_premises(d, path);
      }

      case Rule::DT0: {
        // |- alpha -> beta, certified at the antecedent chi = c.lhs
        if (!arity(d, 1, path)) return false;
        const Sequent& p = d.premises[0].conclusion;
        if (!(c.rhs == Formula::imp(p.lhs, p.rhs)))
          return fail("(DT0) succedent must be the premise as an implication", path);
        return check_premises(d, path);
      }

      case Rule::ImpAnd: {
        if (!arity(d, 0, path)) return false;
        // (a->b) & (a->c) |- a -> b & c
        const Formula& l = c.lhs;
        if (l.is(Formula::Kind::And) && l.lhs().is(Formula::Kind::Imp) &&
            l.rhs().is(Formula::Kind::Imp) && l.lhs().lhs() == l.rhs().lhs()) {
          Formula want = Formula::imp(l.lhs().lhs(), Formula::conj(l.lhs().rhs(), l.rhs().rhs()));
          if (c.rhs == want) return true;
        }
        return fail("(->&) instance has the wrong shape", path);
      }

      case Rule::ImpTr: {
        if (!arity(d, 0, path)) return false;
        // (a->b) & (b->c) |- a -> c
        const Formula& l = c.lhs;
        if (l.is(Formula::Kind::And) && l.lhs().is(Formula::Kind::Imp) &&
            l.rhs().is(Formula::Kind::Imp) && l.lhs().rhs() == l.rhs().lhs()) {
          Formula want = Formula::imp(l.lhs().lhs(), l.rhs().rhs());
          if (c.rhs == want) return true;
        }
        return fail("(->tr) instance has the wrong shape", path);
      }

      case Rule::ImpOrS: {
        if (!arity(d, 0, path) || !schema_ok(d, path, true)) return false;
        auto ls = build_lists(*d.schema);
        const Formula& chi = *d.schema->chi;
        std::vector<Formula> guarded;
        for (const auto& pb : ls.psi_betas) guarded.push_back(Formula::imp(pb, chi));
        Sequent want{Formula::conj(fold_or(ls.imps), fold_and(guarded)),
                     Formula::imp(fold_and(ls.psi_alphas), chi)};
        if (!(c == want)) return fail("(->-|.s) instance has the wrong shape", path);
        return true;
      }

      case Rule::Abs: {
        if (!arity(d, 0, path)) return false;
        // a & ~a |- bot
        const Formula& l = c.lhs;
        if (l.is(Formula::Kind::And) && l.rhs() == Formula::neg(l.lhs()) &&
            c.rhs.is(Formula::Kind::Bot))
          return true;
        return fail("(Abs) instance has the wrong shape", path);
      }

      case Rule::DNI: {
        if (!arity(d, 0, path)) return false;
        if (!(c.rhs == Formula::neg(Formula::neg(c.lhs))))
          return fail("(~~I) instance has the wrong shape", path);
        return true;
      }

      case Rule::Refl1: {
        if (!schema_ok(d, path, true)) return false;
        auto ls = build_lists(*d.schema);
        const Formula& chi = *d.schema->chi;
        size_t n = d.schema->alphas.size();
        if (!arity(d, n, path)) return false;
        for (size_t j = 0; j < n; ++j)
          if (!(d.premises[j].conclusion == Sequent{ls.psi_betas[j], chi}))
            return fail("(Refl1) premise " + std::to_string(j) + " must be psi_j & beta_j |- chi",
                        path);
        Sequent want{Formula::conj(fold_and(ls.psi_alphas), fold_or(ls.imps)), chi};
        if (!(c == want)) return fail("(Refl1) conclusion has the wrong shape", path);
        return check_premises(d, path);
      }

      case Rule::Refl2: {
        if (!arity(d, 0, path) || !schema_ok(d, path, true)) return false;
        auto ls = build_lists(*d.schema);
        const Formula& chi = *d.schema->chi;
        std::vector<Formula> guarded;
        for (const auto& pb : ls.psi_betas) guarded.push_back(Formula::imp(pb, chi));
        Sequent want{fold_and(guarded),
                     Formula::imp(Formula::conj(fold_and(ls.psi_alphas), fold_or(ls.imps)), chi)};
        if (!(c == want)) return fail("(Refl2) instance has the wrong shape", path);
        return true;
      }

      case Rule::Prop1:
      case Rule::Prop2:
        return check_prop(d, path);

      case Rule::Macro: {
        if (!d.macro) return fail("macro node without parameters", path);
        Derivation expansion;
        try {
          expansion = expand_macro(*d.macro, d.premises);
        } catch (const std::invalid_argument& e) {
          return fail(std::string("malformed macro parameters: ") + e.what(), path);
        }
        if (!(expansion.conclusion == c))
          return fail("macro expansion concludes a different sequent", path);
        return check(expansion, path + ".expansion");
      }
    }
    return fail("unknown rule", path);
  }

  // The Prop rules, checked through explicit compactness witnesses: finitely
  // many theorems of alpha, each with its own derivation, whose extracted
  // i-formulas carry an i-derivation of {top} => {bot}.
  bool check_prop(const Derivation& d, const std::string& path) {
    const Formula& alpha = d.conclusion.lhs;
    const Formula& gamma = d.conclusion.rhs;
    if (!d.premises.empty()) return fail("Prop nodes carry witnesses, not premises", path);
    if (!d.prop_i_derivation) return fail("Prop node without an i-derivation", path);
    if (d.prop_i_premises.empty()) return fail("Prop node without i-premises", path);

    IFormulaSet declared;
    for (size_t k = 0; k < d.prop_i_premises.size(); ++k) {
      const auto& ip = d.prop_i_premises[k];
      std::string ipath = path + ".i_premises[" + std::to_string(k) + "]";
      if (ip.witness >= d.prop_witnesses.size())
        return fail("i-premise references a missing witness", ipath);
      if (ip.pairs.empty()) return fail("decomposition requires n >= 1 pairs", ipath);
      const PropWitness& w = d.prop_witnesses[ip.witness];
      if (!(spine_or(ip.pairs, gamma) == w.formula))
        return fail("decomposition does not reconstruct its witness", ipath);
      FormulaSet ante, succ;
      for (const auto& [a, b] : ip.pairs) {
        ante.insert(a);
        succ.insert(b);
      }
      declared.insert(IFormula(std::move(ante), std::move(succ)));
    }

    for (size_t k = 0; k < d.prop_witnesses.size(); ++k) {
      const PropWitness& w = d.prop_witnesses[k];
      std::string wpath = path + ".witnesses[" + std::to_string(k) + "]";
      if (!w.derivation) return fail("witness without a derivation", wpath);
      if (!(w.derivation->conclusion == Sequent{alpha, w.formula}))
        return fail("witness derivation must conclude alpha |- theta", wpath);
      if (!check(*w.derivation, wpath + ".derivation")) return false;
    }

    ISystem isys = d.rule == Rule::Prop2 ? ISystem::I2(gamma) : ISystem::I1();
    ICheckResult ires = check_ideriv(*d.prop_i_derivation, isys);
    if (!ires.ok)
      return fail("i-derivation rejected: " + ires.reason, path + ".i_derivation." + ires.path);
    if (!(d.prop_i_derivation->conclusion == IFormula({Formula::top()}, {Formula::bot()})))
      return fail("i-derivation must conclude {top} => {bot}", path + ".i_derivation");
    if (ires.assumptions != declared)
      return fail("i-derivation assumptions differ from the listed decompositions", path);
    return true;
  }
};

}  // namespace

static std::unique_ptr<Derivation> clone(const std::unique_ptr<Derivation>& p) {
  return p ? std::make_unique<Derivation>(*p) : nullptr;
}

Derivation::Derivation(const Derivation& o)
    : conclusion(o.conclusion),
      rule(o.rule),
      schema(o.schema),
      macro(o.macro),
      premises(o.premises),
      prop_i_premises(o.prop_i_premises),
      prop_i_derivation(o.prop_i_derivation ? std::make_unique<IDerivation>(*o.prop_i_derivation)
                                            : nullptr) {
  for (const auto& w : o.prop_witnesses)
    prop_witnesses.push_back(PropWitness{w.formula, clone(w.derivation)});
}

Derivation& Derivation::operator=(const Derivation& o) {
  if (this != &o) *this = Derivation(o);
  return *this;
}

CheckResult check_derivation(const Derivation& d, System system) {
  Checker c{system};
  c.check(d, "root");
  return c.result;
}

Derivation d_axiom(Formula f) { return Derivation({f, f}, Rule::A); }

Derivation d_cut(Derivation left, Derivation right) {
  Derivation d({left.conclusion.lhs, right.conclusion.rhs}, Rule::Cut);
  d.premises.push_back(std::move(left));
  d.premises.push_back(std::move(right));
  return d;
}

Derivation d_and_r(Derivation left, Derivation right) {
  Derivation d({left.conclusion.lhs,
                Formula::conj(left.conclusion.rhs, right.conclusion.rhs)},
               Rule::AndR);
  d.premises.push_back(std::move(left));
  d.premises.push_back(std::move(right));
  return d;
}

Derivation d_dt0(Formula chi, Derivation premise) {
  Derivation d({std::move(chi),
                Formula::imp(premise.conclusion.lhs, premise.conclusion.rhs)},
               Rule::DT0);
  d.premises.push_back(std::move(premise));
  return d;
}

Derivation d_imp_tr(Formula a, Formula b, Formula c) {
  return Derivation({Formula::conj(Formula::imp(a, b), Formula::imp(b, c)),
                     Formula::imp(std::move(a), std::move(c))},
                    Rule::ImpTr);
}

Derivation d_imp_and(Formula a, Formula b, Formula c) {
  return Derivation({Formula::conj(Formula::imp(a, b), Formula::imp(a, c)),
                     Formula::imp(a, Formula::conj(std::move(b), std::move(c)))},
                    Rule::ImpAnd);
}

Derivation d_project(const std::vector<Formula>& list, size_t i) {
  if (list.empty() || i >= list.size()) throw std::invalid_argument("projection out of range");
  if (list.size() == 1) return d_axiom(list[0]);
  Formula whole = fold_and(list);
  if (i == 0) return Derivation({whole, list[0]}, Rule::AndL1);
  std::vector<Formula> rest(list.begin() + 1, list.end());
  Derivation tail({whole, fold_and(rest)}, Rule::AndL2);
  return d_cut(std::move(tail), d_project(rest, i - 1));
}

namespace {

// fold(gamma) |- fold(selection of gamma at the given positions)
Derivation d_select(const std::vector<Formula>& gamma, const std::vector<size_t>& positions,
                    size_t from) {
  if (positions.size() - from == 1) return d_project(gamma, positions[from]);
  return d_and_r(d_project(gamma, positions[from]), d_select(gamma, positions, from + 1));
}

Derivation expand_top(const Formula& chi) { return d_dt0(chi, d_axiom(Formula::bot())); }

Derivation expand_mon(const MacroParams& p, std::vector<Derivation> premises) {
  if (premises.size() != 1) throw std::invalid_argument("Mon takes one premise tree");
  const auto& gamma = p.formulas;
  const auto& gamma0 = p.formulas2;
  Derivation& inner = premises[0];
  if (!(inner.conclusion.lhs == fold_and(gamma0)))
    throw std::invalid_argument("Mon premise must conclude from /\\gamma0");
  if (gamma0.empty()) {
    // /\{} = top
    return d_cut(expand_top(fold_and(gamma)), std::move(inner));
  }
  std::vector<size_t> positions;
  size_t at = 0;
  for (const auto& g : gamma0) {
    while (at < gamma.size() && !(gamma[at] == g)) ++at;
    if (at == gamma.size()) throw std::invalid_argument("gamma0 is not a sublist of gamma");
    positions.push_back(at++);
  }
  return d_cut(d_select(gamma, positions, 0), std::move(inner));
}

Derivation expand_and_imp_and(const MacroParams& p) {
  const auto& alphas = p.formulas;
  const auto& betas = p.formulas2;
  size_t n = alphas.size();
  if (n == 0 || betas.size() != n)
    throw std::invalid_argument("AndImpAnd requires equal non-empty alpha/beta lists");
  std::vector<Formula> imps;
  for (size_t j = 0; j < n; ++j) imps.push_back(Formula::imp(alphas[j], betas[j]));
  Formula x = fold_and(imps);
  Formula conj_a = fold_and(alphas);

  // x |- /\alpha -> beta_j, by composing a projection with the j-th implication
  auto to_beta = [&](size_t j) {
    if (n == 1) return d_axiom(imps[0]);
    Derivation lead = d_dt0(x, d_project(alphas, j));        // x |- /\alpha -> alpha_j
    Derivation step = d_project(imps, j);                    // x |- alpha_j -> beta_j
    return d_cut(d_and_r(std::move(lead), std::move(step)),
                 d_imp_tr(conj_a, alphas[j], betas[j]));
  };

  // x |- /\alpha -> fold(betas[j..])
  auto combine = [&](auto&& self, size_t j) -> Derivation {
    if (j + 1 == n) return to_beta(j);
    std::vector<Formula> rest(betas.begin() + j + 1, betas.end());
    Derivation right = self(self, j + 1);
    return d_cut(d_and_r(to_beta(j), std::move(right)),
                 d_imp_and(conj_a, betas[j], fold_and(rest)));
  };
  return combine(combine, 0);
}

Derivation expand_neg_antitone(const MacroParams& p, std::vector<Derivation> premises) {
  if (premises.size() != 1) throw std::invalid_argument("NegAntitone takes one premise tree");
  if (!p.a || !p.b) throw std::invalid_argument("NegAntitone requires alpha and beta");
  const Formula& alpha = *p.a;
  const Formula& beta = *p.b;
  if (!(premises[0].conclusion == Sequent{alpha, beta}))
    throw std::invalid_argument("NegAntitone premise must conclude alpha |- beta");
  Formula nb = Formula::neg(beta);
  Derivation imp_ab = d_dt0(nb, std::move(premises[0]));  // ~beta |- alpha -> beta
  return d_cut(d_and_r(std::move(imp_ab), d_axiom(nb)),
               d_imp_tr(alpha, beta, Formula::bot()));
}

}  // namespace

Derivation expand_macro(const MacroParams& params, std::vector<Derivation> premises) {
  switch (params.name) {
    case MacroName::Top:
      if (!params.a) throw std::invalid_argument("Top requires chi");
      return expand_top(*params.a);
    case MacroName::ImpRefl:
      if (!params.a || !params.b) throw std::invalid_argument("ImpRefl requires phi and chi");
      return d_dt0(*params.b, d_axiom(*params.a));
    case MacroName::Mon:
      return expand_mon(params, std::move(premises));
    case MacroName::AndImpAnd:
      return expand_and_imp_and(params);
    case MacroName::NegAntitone:
      return expand_neg_antitone(params, std::move(premises));
  }
  throw std::invalid_argument("unknown macro");
}

CheckResult check_set_consequence(const std::vector<Formula>& gamma, const Formula& alpha,
                                  const std::vector<Formula>& gamma0, const Derivation& d,
                                  System system) {
  size_t at = 0;
  for (const auto& g : gamma0) {
    while (at < gamma.size() && !(gamma[at] == g)) ++at;
    if (at == gamma.size()) return {false, "gamma0 is not a sublist of gamma", "root"};
    ++at;
  }
  if (!(d.conclusion == Sequent{fold_and(gamma0), alpha}))
    return {false, "derivation must conclude /\\gamma0 |- alpha", "root"};
  return check_derivation(d, system);
}

}  // namespace fpl
