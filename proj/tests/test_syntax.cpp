#include "doctest.h"
#include "fpl/formula.hpp"
#include "fpl/parse.hpp"
#include "test_util.hpp"

using namespace fpl;

static const Formula p = Formula::letter(0);
static const Formula q = Formula::letter(1);
static const Formula r = Formula::letter(2);
static const Formula s = Formula::letter(3);

TEST_CASE("parse basics") {
  CHECK(parse("p0 -> bot") == Formula::imp(p, Formula::bot()));
  CHECK(parse("~p0") == Formula::imp(p, Formula::bot()));
  CHECK(parse("top") == Formula::imp(Formula::bot(), Formula::bot()));
  CHECK(parse("p0 & p1 & p2") == Formula::conj(Formula::conj(p, q), r));
  CHECK(parse("p0 -> p1 -> p2") == Formula::imp(p, Formula::imp(q, r)));
  CHECK(parse("p0 & (p1 | p2)") == Formula::conj(p, Formula::disj(q, r)));
  CHECK(parse("~p0 & p1") == Formula::conj(Formula::neg(p), q));
}

TEST_CASE("mixed & and | without parentheses is rejected") {
  CHECK_THROWS_AS(parse("p0 & p1 | p2"), ParseError);
  CHECK_THROWS_AS(parse("p0 | p1 & p2"), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse("p0 -> ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
  CHECK_THROWS_AS(parse("p0 )"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p0 p1"), ParseError);
}

TEST_CASE("print sugar and forced parenthesization") {
  CHECK(print(Formula::imp(p, Formula::bot())) == "~p0");
  CHECK(print(Formula::conj(p, Formula::disj(q, r))) == "p0 & (p1 | p2)");
  CHECK(print(Formula::top()) == "top");
  CHECK(print(Formula::neg(Formula::conj(p, q))) == "~(p0 & p1)");
  CHECK(print(Formula::neg(Formula::neg(p))) == "~~p0");
}

TEST_CASE("round-trip: parse(print(f)) == f") {
  std::mt19937_64 rng(20260823);
  for (int i = 0; i < 2000; ++i) {
    Formula f = testutil::random_formula(rng, 8);
    CAPTURE(print(f));
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("i-formula text form round-trip") {
  IFormula f = parse_iformula("{p0, p1 -> p2} => {bot}");
  CHECK(f.ante() == FormulaSet{p, Formula::imp(q, r)});
  CHECK(f.succ() == FormulaSet{Formula::bot()});
  CHECK(parse_iformula(print(f)) == f);
  CHECK_THROWS_AS(parse_iformula("{p0} => "), ParseError);
}

TEST_CASE("iformula sides must be non-empty, order-independent equality") {
  CHECK_THROWS_AS(IFormula({}, {p}), std::invalid_argument);
  CHECK(IFormula({p, q}, {r}) == IFormula({q, p}, {r}));
  CHECK(IFormula({p, p}, {r}) == IFormula({p}, {r}));
}

TEST_CASE("subformulas") {
  CHECK(subformulas(Formula::bot()) == FormulaSet{Formula::bot()});
  CHECK(subformulas(Formula::imp(p, q)) == FormulaSet{Formula::imp(p, q), p, q});
  CHECK(subformulas(Formula::conj(p, p)) == FormulaSet{Formula::conj(p, p), p});
}

TEST_CASE("decompose walks the right |-spine") {
  Formula gamma = q;
  SUBCASE("single implication disjunct") {
    Formula theta = Formula::disj(Formula::imp(Formula::top(), p), q);
    auto ds = decompose(theta, gamma);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].pairs == std::vector<std::pair<Formula, Formula>>{{Formula::top(), p}});
    CHECK(ds[0].tail == q);
    CHECK(ds[0].reconstruct() == theta);
  }
  SUBCASE("n >= 1 is required") {
    CHECK(decompose(q, q).empty());
  }
  SUBCASE("spine cut matching is exact") {
    // (p->q) | ((r->s) | q): the cut after (p->q) fails since (r->s)|q != q
    Formula theta = Formula::disj(Formula::imp(p, q),
                                  Formula::disj(Formula::imp(r, s), q));
    auto ds = decompose(theta, q);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].pairs.size() == 2);
    CHECK(ds[0].iformula() == IFormula({p, r}, {q, s}));
    CHECK(ds[0].reconstruct() == theta);
  }
  SUBCASE("gamma with its own spine yields several cuts") {
    Formula tail = Formula::disj(Formula::imp(r, s), q);
    Formula theta = Formula::disj(Formula::imp(p, q), tail);
    auto ds = decompose(theta, tail);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].pairs.size() == 1);
  }
  SUBCASE("stops at a non-implication disjunct") {
    Formula theta = Formula::disj(p, Formula::disj(Formula::imp(r, s), q));
    CHECK(decompose(theta, q).empty());
  }
}

TEST_CASE("decompose soundness on random formulas") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Formula theta = testutil::random_formula(rng, 6);
    Formula gamma = testutil::random_formula(rng, 3);
    for (const auto& d : decompose(theta, gamma)) {
      CHECK(!d.pairs.empty());
      CHECK(d.reconstruct() == theta);
      CHECK(d.tail == gamma);
    }
  }
}

TEST_CASE("i_gamma on the Example 1 premises") {
  // Gamma_1 = {(top->p)|((top->q)|r), (p->bot)|r, (q->bot)|r}, gamma = r
  Formula t = Formula::top();
  FormulaSet gamma1{
      Formula::disj(Formula::imp(t, p), Formula::disj(Formula::imp(t, q), r)),
      Formula::disj(Formula::neg(p), r),
      Formula::disj(Formula::neg(q), r)};
  auto is = i_gamma(gamma1, r);
  IFormulaSet expected{IFormula({t}, {p, q}),
                       IFormula({p}, {Formula::bot()}),
                       IFormula({q}, {Formula::bot()})};
  CHECK(is == expected);
}

TEST_CASE("i_gamma edge cases") {
  CHECK(i_gamma({q}, q).empty());
  Formula theta = Formula::disj(Formula::imp(p, q), Formula::disj(Formula::imp(r, s), q));
  CHECK(i_gamma({theta}, q) == IFormulaSet{IFormula({p, r}, {q, s})});
}

TEST_CASE("i_gamma is monotone in Gamma") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    FormulaSet g1, g2;
    for (int j = 0; j < 4; ++j) g1.insert(testutil::random_formula(rng, 5));
    g2 = g1;
    for (int j = 0; j < 2; ++j) g2.insert(testutil::random_formula(rng, 5));
    Formula gamma = testutil::random_formula(rng, 3);
    auto i1 = i_gamma(g1, gamma);
    auto i2 = i_gamma(g2, gamma);
    for (const auto& f : i1) CHECK(i2.count(f) == 1);
  }
}
