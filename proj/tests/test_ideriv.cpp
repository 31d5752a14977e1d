#include "doctest.h"
#include "fpl/ideriv.hpp"
#include "fpl/model.hpp"
#include "fpl/parse.hpp"
#include "test_util.hpp"

using namespace fpl;

namespace {
const Formula p = Formula::letter(0);
const Formula q = Formula::letter(1);
const Formula r = Formula::letter(2);
const Formula s = Formula::letter(3);
const Formula top = Formula::top();
const Formula bot = Formula::bot();

// The derivation of Example 1: from {top}=>{p,q}, {p}=>{bot}, {q}=>{bot}
// conclude {top}=>{bot} by cutting p and then q.
IDerivation example1_tree() {
  IDerivation a0 = IDerivation::assume(IFormula({top}, {p, q}));
  IDerivation a1 = IDerivation::assume(IFormula({p}, {bot}));
  IDerivation a2 = IDerivation::assume(IFormula({q}, {bot}));
  IDerivation step1 = IDerivation::icut(p, std::move(a0), std::move(a1),
                                        IFormula({top}, {q, bot}));
  return IDerivation::icut(q, std::move(step1), std::move(a2), IFormula({top}, {bot}));
}

IFormulaSet example1_assumptions() {
  return {IFormula({top}, {p, q}), IFormula({p}, {bot}), IFormula({q}, {bot})};
}
}  // namespace

TEST_CASE("basic i-rules") {
  SUBCASE("i-A needs a shared formula") {
    CHECK(check_ideriv(IDerivation::ia(IFormula({p, q}, {q, r})), ISystem::I1()).ok);
    auto res = check_ideriv(IDerivation::ia(IFormula({p}, {q})), ISystem::I1());
    CHECK(!res.ok);
    CHECK(res.path == "root");
  }
  SUBCASE("i-&L projections and i-&R") {
    CHECK(check_ideriv(IDerivation::and_l1(p, q), ISystem::I1()).ok);
    CHECK(check_ideriv(IDerivation::and_l2(p, q), ISystem::I1()).ok);
    CHECK(check_ideriv(IDerivation::and_r(p, q), ISystem::I1()).ok);
    // the wrong conjunct is rejected
    IDerivation bad{IFormula({Formula::conj(p, q)}, {r}), IRule::IAndL1};
    CHECK(!check_ideriv(bad, ISystem::I1()).ok);
    // i-&R with a missing conjunct in the antecedents
    IDerivation bad2{IFormula({p}, {Formula::conj(p, q)}), IRule::IAndR};
    CHECK(!check_ideriv(bad2, ISystem::I1()).ok);
  }
  SUBCASE("accepted derivations report their open assumptions") {
    auto res = check_ideriv(IDerivation::assume(IFormula({p}, {q})), ISystem::I1());
    CHECK(res.ok);
    CHECK(res.assumptions == IFormulaSet{IFormula({p}, {q})});
    // closed trees report none
    CHECK(check_ideriv(IDerivation::ia(IFormula({p}, {p})), ISystem::I1()).assumptions.empty());
  }
}

TEST_CASE("gamma-Refl") {
  IDerivation d = IDerivation::gamma_refl({{p, q}}, r);
  CHECK(d.conclusion == IFormula({p, parse("(p0 -> p1) | p2")}, {q}));
  CHECK(check_ideriv(d, ISystem::I2(r)).ok);
  SUBCASE("unavailable in I1") { CHECK(!check_ideriv(d, ISystem::I1()).ok); }
  SUBCASE("the gamma of the system matters") { CHECK(!check_ideriv(d, ISystem::I2(s)).ok); }
  SUBCASE("two pairs nest right") {
    IDerivation d2 = IDerivation::gamma_refl({{p, q}, {r, s}}, bot);
    Formula spine = parse("(p0 -> p1) | ((p2 -> p3) | bot)");
    CHECK(d2.conclusion == IFormula({p, r, spine}, {q, s}));
    CHECK(check_ideriv(d2, ISystem::I2(bot)).ok);
  }
}

TEST_CASE("i-Cut") {
  SUBCASE("the Example-1 derivation is accepted with its three assumptions") {
    auto res = check_ideriv(example1_tree(), ISystem::I1());
    CHECK(res.ok);
    CHECK(res.assumptions == example1_assumptions());
  }
  SUBCASE("cut formula must occur on the active sides") {
    IDerivation d = IDerivation::icut(r, IDerivation::assume(IFormula({top}, {p})),
                                      IDerivation::assume(IFormula({p}, {bot})),
                                      IFormula({top}, {bot}));
    auto res = check_ideriv(d, ISystem::I1());
    CHECK(!res.ok);
    CHECK(res.assumptions.empty());
  }
  SUBCASE("conclusion must be one of the keep/drop unions") {
    IDerivation d = IDerivation::icut(p, IDerivation::assume(IFormula({top}, {p})),
                                      IDerivation::assume(IFormula({p}, {bot})),
                                      IFormula({top}, {q}));
    CHECK(!check_ideriv(d, ISystem::I1()).ok);
  }
  SUBCASE("failures deep in the tree carry a path") {
    IDerivation bad = IDerivation::icut(p, IDerivation::ia(IFormula({top}, {p})),  // not an axiom
                                        IDerivation::assume(IFormula({p}, {bot})),
                                        IFormula({top}, {bot}));
    auto res = check_ideriv(bad, ISystem::I1());
    CHECK(!res.ok);
    CHECK(res.path == "root.premises[0]");
  }
}

TEST_CASE("derived i-rules expand and check") {
  SUBCASE("IMon") {
    IMacroParams m{IMacroName::IMon, {p}, {q}, {p, r}, {q, s}, {}};
    IDerivation d = expand_imacro(m);
    CHECK(d.conclusion == IFormula({p, r}, {q, s}));
    auto res = check_ideriv(d, ISystem::I1());
    CHECK(res.ok);
    CHECK(res.assumptions == IFormulaSet{IFormula({p}, {q})});
    CHECK_THROWS_AS(
        expand_imacro(IMacroParams{IMacroName::IMon, {p}, {q}, {r}, {q}, {}}),
        std::invalid_argument);
  }
  SUBCASE("ICut1 reproduces the Example-1 shape") {
    IMacroParams m{IMacroName::ICut1, {top}, {}, {}, {bot}, {p, q}};
    IDerivation d = expand_imacro(m);
    CHECK(d.conclusion == IFormula({top}, {bot}));
    auto res = check_ideriv(d, ISystem::I1());
    CHECK(res.ok);
    CHECK(res.assumptions == example1_assumptions());
  }
  SUBCASE("ICut2") {
    // {d1 => t1 u {phi}} for phi in Delta, {d2 u Delta => t2} gives d1 u d2 => t1 u t2
    IMacroParams m{IMacroName::ICut2, {top}, {s}, {r}, {bot}, {p, q}};
    IDerivation d = expand_imacro(m);
    CHECK(d.conclusion == IFormula({top, r}, {s, bot}));
    auto res = check_ideriv(d, ISystem::I1());
    CHECK(res.ok);
    CHECK(res.assumptions == IFormulaSet{IFormula({top}, {s, p}), IFormula({top}, {s, q}),
                                         IFormula({r, p, q}, {bot})});
  }
  SUBCASE("an IMacro node in a tree is expanded and compared") {
    IDerivation node{IFormula({p, r}, {q, s}), IRule::IMacro};
    node.macro = IMacroParams{IMacroName::IMon, {p}, {q}, {p, r}, {q, s}, {}};
    CHECK(check_ideriv(node, ISystem::I1()).ok);
    node.conclusion = IFormula({p, r}, {q});
    auto res = check_ideriv(node, ISystem::I1());
    CHECK(!res.ok);
    CHECK(res.reason == "macro expansion concludes a different i-formula");
  }
}

namespace {

// Random trees built from the basic rules, for the soundness sweeps.
IDerivation random_itree(std::mt19937_64& rng, int depth) {
  auto rand_f = [&] { return testutil::random_formula(rng, 2); };
  auto rand_set = [&](const Formula& seed) {
    FormulaSet out{seed};
    while (rng() % 2) out.insert(rand_f());
    return out;
  };
  switch (depth <= 0 ? rng() % 5 : rng() % 6) {
    case 0: {
      Formula shared = rand_f();
      return IDerivation::ia(IFormula(rand_set(shared), rand_set(shared)));
    }
    case 1: return IDerivation::and_l1(rand_f(), rand_f());
    case 2: return IDerivation::and_l2(rand_f(), rand_f());
    case 3: return IDerivation::and_r(rand_f(), rand_f());
    case 4: return IDerivation::assume(IFormula(rand_set(rand_f()), rand_set(rand_f())));
    default: {
      IDerivation left = random_itree(rng, depth - 1);
      auto it = left.conclusion.succ().begin();
      std::advance(it, rng() % left.conclusion.succ().size());
      Formula phi = *it;
      FormulaSet d2{phi};
      if (rng() % 2) d2.insert(rand_f());
      FormulaSet t2 = rand_set(rand_f());
      FormulaSet ante = left.conclusion.ante();
      ante.insert(d2.begin(), d2.end());
      ante.erase(phi);
      if (ante.empty()) ante.insert(phi);
      FormulaSet succ = left.conclusion.succ();
      succ.erase(phi);
      succ.insert(t2.begin(), t2.end());
      IDerivation right = IDerivation::assume(IFormula(std::move(d2), t2));
      // the checker accepts whichever keep/drop combination this lands on
      IDerivation out = IDerivation::icut(phi, std::move(left), std::move(right),
                                          IFormula(ante, succ));
      return out;
    }
  }
}

WorldSet assumptions_truth(const Model& m, const IFormulaSet& assumptions) {
  WorldSet acc = WorldSet::full(m.frame.size());
  for (const auto& a : assumptions) acc = acc & eval_iformula(m, a);
  return acc;
}

}  // namespace

TEST_CASE("i-soundness of accepted I1 trees, sampled") {
  std::mt19937_64 rng(21);
  int accepted = 0;
  for (int i = 0; i < 400; ++i) {
    IDerivation d = random_itree(rng, 3);
    auto res = check_ideriv(d, ISystem::I1());
    if (!res.ok) continue;
    ++accepted;
    for (int j = 0; j < 8; ++j) {
      int n = 1 + static_cast<int>(rng() % 3);
      Model m = testutil::random_kripke_model(rng, testutil::random_frame(rng, n));
      CHECK(assumptions_truth(m, res.assumptions).subset_of(eval_iformula(m, d.conclusion)));
    }
  }
  CHECK(accepted > 200);
}

TEST_CASE("i-soundness of I2(gamma) trees on reflexive models, sampled") {
  std::mt19937_64 rng(22);
  Formula gamma = r;
  for (int i = 0; i < 300; ++i) {
    // a gamma-Refl axiom cut against random assumptions
    std::vector<std::pair<Formula, Formula>> pairs;
    int n_pairs = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < n_pairs; ++k)
      pairs.emplace_back(testutil::random_formula(rng, 2), testutil::random_formula(rng, 2));
    IDerivation d = IDerivation::gamma_refl(pairs, gamma);
    if (rng() % 2) {
      Formula phi = *d.conclusion.succ().begin();
      FormulaSet ante = d.conclusion.ante();
      FormulaSet succ = d.conclusion.succ();
      succ.erase(phi);
      succ.insert(bot);
      d = IDerivation::icut(phi, std::move(d),
                            IDerivation::assume(IFormula({phi}, {bot})),
                            IFormula(std::move(ante), std::move(succ)));
    }
    auto res = check_ideriv(d, ISystem::I2(gamma));
    REQUIRE(res.ok);
    for (int j = 0; j < 8; ++j) {
      int size = 1 + static_cast<int>(rng() % 3);
      FiniteFrame f = testutil::random_frame(rng, size);
      for (int w = 0; w < size; ++w) f.add_edge(w, w);
      Model m = testutil::random_kripke_model(rng, f);
      WorldSet bound = eval_iformula(m, d.conclusion) | pre(m.frame, eval(m, gamma));
      CHECK(assumptions_truth(m, res.assumptions).subset_of(bound));
    }
  }
}
