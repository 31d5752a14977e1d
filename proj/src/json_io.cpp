#include "fpl/json_io.hpp"

#include "fpl/parse.hpp"

namespace fpl {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

bool is_natural(const json& j) { return j.is_number_integer() && j.get<int64_t>() >= 0; }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field: ") + key);
  return j.at(key);
}

Formula formula_from(const json& j) {
  if (!j.is_string()) bad("formula must be a string");
  try {
    return parse(j.get<std::string>());
  } catch (const ParseError& e) {
    bad(std::string("bad formula: ") + e.what());
  }
}

json formulas_to(const std::vector<Formula>& fs) {
  json out = json::array();
  for (const Formula& f : fs) out.push_back(print(f));
  return out;
}

json formulas_to(const FormulaSet& fs) {
  json out = json::array();
  for (const Formula& f : fs) out.push_back(print(f));
  return out;
}

std::vector<Formula> formula_list_from(const json& j) {
  if (!j.is_array()) bad("expected a formula array");
  std::vector<Formula> out;
  for (const json& x : j) out.push_back(formula_from(x));
  return out;
}

FormulaSet formula_set_from(const json& j) {
  auto list = formula_list_from(j);
  return FormulaSet(list.begin(), list.end());
}

json pairs_to(const std::vector<std::pair<Formula, Formula>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back(json::array({print(a), print(b)}));
  return out;
}

std::vector<std::pair<Formula, Formula>> pairs_from(const json& j) {
  if (!j.is_array()) bad("expected an array of formula pairs");
  std::vector<std::pair<Formula, Formula>> out;
  for (const json& x : j) {
    if (!x.is_array() || x.size() != 2) bad("a pair must be a two-element array");
    out.emplace_back(formula_from(x[0]), formula_from(x[1]));
  }
  return out;
}

// enum <-> name tables

constexpr std::pair<Rule, const char*> kRuleNames[] = {
    {Rule::A, "A"},           {Rule::Cut, "Cut"},       {Rule::Bot, "Bot"},
    {Rule::AndR, "AndR"},     {Rule::AndL1, "AndL1"},   {Rule::AndL2, "AndL2"},
    {Rule::OrR1, "OrR1"},     {Rule::OrR2, "OrR2"},     {Rule::OrL, "OrL"},
    {Rule::DT0, "DT0"},       {Rule::ImpAnd, "ImpAnd"}, {Rule::ImpTr, "ImpTr"},
    {Rule::ImpOrS, "ImpOrS"}, {Rule::Abs, "Abs"},       {Rule::DNI, "DNI"},
    {Rule::Refl1, "Refl1"},   {Rule::Refl2, "Refl2"},   {Rule::Prop1, "Prop1"},
    {Rule::Prop2, "Prop2"},   {Rule::Macro, "Macro"}};

constexpr std::pair<MacroName, const char*> kMacroNames[] = {
    {MacroName::Mon, "Mon"},
    {MacroName::Top, "Top"},
    {MacroName::ImpRefl, "ImpRefl"},
    {MacroName::AndImpAnd, "AndImpAnd"},
    {MacroName::NegAntitone, "NegAntitone"}};

constexpr std::pair<IRule, const char*> kIRuleNames[] = {
    {IRule::Assumption, "Assumption"}, {IRule::IA, "IA"},
    {IRule::ICut, "ICut"},             {IRule::IAndL1, "IAndL1"},
    {IRule::IAndL2, "IAndL2"},         {IRule::IAndR, "IAndR"},
    {IRule::GammaRefl, "GammaRefl"},   {IRule::IMacro, "IMacro"}};

constexpr std::pair<IMacroName, const char*> kIMacroNames[] = {{IMacroName::IMon, "IMon"},
                                                               {IMacroName::ICut1, "ICut1"},
                                                               {IMacroName::ICut2, "ICut2"},
                                                               {IMacroName::Mon, "Mon"}};

template <typename E, size_t N>
const char* name_of(const std::pair<E, const char*> (&table)[N], E value) {
  for (const auto& [e, name] : table)
    if (e == value) return name;
  bad("unknown enum value");
}

template <typename E, size_t N>
E value_of(const std::pair<E, const char*> (&table)[N], const json& j) {
  if (!j.is_string()) bad("rule name must be a string");
  std::string s = j.get<std::string>();
  for (const auto& [e, name] : table)
    if (s == name) return e;
  bad("unknown rule name: " + s);
}

}  // namespace

json to_json(const Model& m) {
  json rel = json::array();
  for (auto [i, j] : m.frame.relation()) rel.push_back(json::array({i, j}));
  json val = json::object();
  for (const auto& [p, ws] : m.valuation) {
    json worlds = json::array();
    for (int w : ws.worlds()) worlds.push_back(w);
    val["p" + std::to_string(p)] = std::move(worlds);
  }
  return json{{"worlds", m.frame.size()}, {"relation", std::move(rel)},
              {"valuation", std::move(val)}};
}

Model model_from_json(const json& j) {
  const json& worlds = field(j, "worlds");
  if (!is_natural(worlds) || worlds.get<int>() > 62) bad("bad world count");
  int n = worlds.get<int>();
  FiniteFrame f(n);
  for (const json& e : field(j, "relation")) {
    if (!e.is_array() || e.size() != 2 || !is_natural(e[0]) ||
        !is_natural(e[1]))
      bad("relation entries are [i, j] pairs");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a >= n || b >= n) bad("relation world out of range");
    f.add_edge(a, b);
  }
  Model m{std::move(f), {}};
  for (const auto& [key, arr] : field(j, "valuation").items()) {
    if (key.size() < 2 || key[0] != 'p' ||
        key.find_first_not_of("0123456789", 1) != std::string::npos)
      bad("valuation keys look like p0, p1, ...");
    uint64_t bits = 0;
    if (!arr.is_array()) bad("valuation values are world arrays");
    for (const json& w : arr) {
      if (!is_natural(w) || w.get<int>() >= n) bad("valuation world out of range");
      bits |= uint64_t{1} << w.get<int>();
    }
    m.valuation.emplace(static_cast<unsigned>(std::stoul(key.substr(1))), WorldSet(n, bits));
  }
  return m;
}

json to_json(const IFormula& f) {
  return json{{"ante", formulas_to(f.ante())}, {"succ", formulas_to(f.succ())}};
}

IFormula iformula_from_json(const json& j) {
  FormulaSet ante = formula_set_from(field(j, "ante"));
  FormulaSet succ = formula_set_from(field(j, "succ"));
  if (ante.empty() || succ.empty()) bad("i-formula sides must be non-empty");
  return IFormula(std::move(ante), std::move(succ));
}

json to_json(const IDerivation& d) {
  json out{{"rule", name_of(kIRuleNames, d.rule)}, {"iformula", to_json(d.conclusion)}};
  if (d.cut) out["cut"] = print(*d.cut);
  if (!d.pairs.empty()) out["pairs"] = pairs_to(d.pairs);
  if (d.macro) {
    const IMacroParams& p = *d.macro;
    out["params"] = json{{"name", name_of(kIMacroNames, p.name)},
                         {"d1", formulas_to(p.d1)},
                         {"t1", formulas_to(p.t1)},
                         {"d2", formulas_to(p.d2)},
                         {"t2", formulas_to(p.t2)},
                         {"side", formulas_to(p.side)}};
  }
  if (!d.premises.empty()) {
    json prem = json::array();
    for (const IDerivation& p : d.premises) prem.push_back(to_json(p));
    out["premises"] = std::move(prem);
  }
  return out;
}

IDerivation ideriv_from_json(const json& j) {
  IDerivation d{iformula_from_json(field(j, "iformula")),
                value_of(kIRuleNames, field(j, "rule"))};
  if (j.contains("cut")) d.cut = formula_from(j.at("cut"));
  if (j.contains("pairs")) d.pairs = pairs_from(j.at("pairs"));
  if (j.contains("params")) {
    const json& p = j.at("params");
    d.macro = IMacroParams{value_of(kIMacroNames, field(p, "name")),
                           formula_set_from(field(p, "d1")), formula_set_from(field(p, "t1")),
                           formula_set_from(field(p, "d2")), formula_set_from(field(p, "t2")),
                           formula_set_from(field(p, "side"))};
  }
  if (j.contains("premises"))
    for (const json& p : j.at("premises")) d.premises.push_back(ideriv_from_json(p));
  return d;
}

json to_json(const Derivation& d) {
  json out{{"rule", name_of(kRuleNames, d.rule)},
           {"lhs", print(d.conclusion.lhs)},
           {"rhs", print(d.conclusion.rhs)}};
  if (d.schema) {
    json p{{"alphas", formulas_to(d.schema->alphas)},
           {"betas", formulas_to(d.schema->betas)},
           {"psis", formulas_to(d.schema->psis)}};
    if (d.schema->chi) p["chi"] = print(*d.schema->chi);
    out["params"] = std::move(p);
  }
  if (d.macro) {
    json p{{"name", name_of(kMacroNames, d.macro->name)},
           {"formulas", formulas_to(d.macro->formulas)},
           {"formulas2", formulas_to(d.macro->formulas2)}};
    if (d.macro->a) p["a"] = print(*d.macro->a);
    if (d.macro->b) p["b"] = print(*d.macro->b);
    out["params"] = std::move(p);
  }
  if (!d.premises.empty()) {
    json prem = json::array();
    for (const Derivation& p : d.premises) prem.push_back(to_json(p));
    out["premises"] = std::move(prem);
  }
  if (!d.prop_witnesses.empty()) {
    json ws = json::array();
    for (const PropWitness& w : d.prop_witnesses) {
      json entry{{"formula", print(w.formula)}};
      if (w.derivation) entry["derivation"] = to_json(*w.derivation);
      ws.push_back(std::move(entry));
    }
    out["witnesses"] = std::move(ws);
  }
  if (!d.prop_i_premises.empty()) {
    json ip = json::array();
    for (const PropIPremise& p : d.prop_i_premises)
      ip.push_back(json{{"witness", p.witness}, {"pairs", pairs_to(p.pairs)}});
    out["i_premises"] = std::move(ip);
  }
  if (d.prop_i_derivation) out["i_derivation"] = to_json(*d.prop_i_derivation);
  return out;
}

Derivation derivation_from_json(const json& j) {
  Derivation d({formula_from(field(j, "lhs")), formula_from(field(j, "rhs"))},
               value_of(kRuleNames, field(j, "rule")));
  if (j.contains("params")) {
    const json& p = j.at("params");
    if (d.rule == Rule::Macro) {
      MacroParams m{value_of(kMacroNames, field(p, "name")),
                    formula_list_from(field(p, "formulas")),
                    formula_list_from(field(p, "formulas2")), {}, {}};
      if (p.contains("a")) m.a = formula_from(p.at("a"));
      if (p.contains("b")) m.b = formula_from(p.at("b"));
      d.macro = std::move(m);
    } else {
      SchemaParams s{formula_list_from(field(p, "alphas")),
                     formula_list_from(field(p, "betas")),
                     formula_list_from(field(p, "psis")), {}};
      if (p.contains("chi")) s.chi = formula_from(p.at("chi"));
      d.schema = std::move(s);
    }
  }
  if (j.contains("premises"))
    for (const json& p : j.at("premises")) d.premises.push_back(derivation_from_json(p));
  if (j.contains("witnesses"))
    for (const json& w : j.at("witnesses")) {
      PropWitness pw{formula_from(field(w, "formula")), nullptr};
      if (w.contains("derivation"))
        pw.derivation = std::make_unique<Derivation>(derivation_from_json(w.at("derivation")));
      d.prop_witnesses.push_back(std::move(pw));
    }
  if (j.contains("i_premises"))
    for (const json& p : j.at("i_premises")) {
      const json& widx = field(p, "witness");
      if (!is_natural(widx)) bad("witness index must be a natural number");
      d.prop_i_premises.push_back({widx.get<size_t>(), pairs_from(field(p, "pairs"))});
    }
  if (j.contains("i_derivation"))
    d.prop_i_derivation = std::make_unique<IDerivation>(ideriv_from_json(j.at("i_derivation")));
  return d;
}

json to_json(const IFormulaSet& premises) {
  json out = json::array();
  for (const IFormula& f : premises) out.push_back(to_json(f));
  return out;
}

IFormulaSet iformula_set_from_json(const json& j) {
  if (!j.is_array()) bad("premise file must be a JSON array of i-formulas");
  IFormulaSet out;
  for (const json& x : j) out.insert(iformula_from_json(x));
  return out;
}

}  // namespace fpl
