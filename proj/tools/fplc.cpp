#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fpl/json_io.hpp"
#include "fpl/parse.hpp"
#include "fpl/saturate.hpp"
#include "fpl/search.hpp"

using namespace fpl;
using nlohmann::json;

namespace {

constexpr int kOk = 0;        // success / accept / none found as requested
constexpr int kNegative = 1;  // reject / countermodel found / goal not proven
constexpr int kUsage = 2;     // usage, IO or format errors

struct Failure {
  int code;
  std::string message;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
  return j;
}

Model load_model(const std::string& path, bool allow_bare_frame = false) {
  json j = load_json(path);
  if (allow_bare_frame && j.is_object() && !j.contains("valuation")) j["valuation"] = json::object();
  try {
    return model_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

Formula parse_or_fail(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Failure{kUsage, std::string("bad formula: ") + e.what()};
  }
}

ModelClass class_by_name(const std::string& name) {
  if (name == "all") return ModelClass::all();
  if (name == "d1") return ModelClass::d1();
  return ModelClass::d2();
}

json classification_json(const FrameClassification& c) {
  json w = json::object();
  for (const auto& [prop, pw] : c.witnesses) {
    json entry{{"world", pw.world}};
    if (pw.successor >= 0) entry["successor"] = pw.successor;
    w[prop] = std::move(entry);
  }
  return json{{"reflexive", c.reflexive},
              {"successor_serial", c.successor_serial},
              {"pseudo_reflexive", c.pseudo_reflexive},
              {"strongly_pseudo_reflexive", c.strongly_pseudo_reflexive},
              {"pseudo_symmetric", c.pseudo_symmetric},
              {"weakly_pseudo_symmetric", c.weakly_pseudo_symmetric},
              {"witnesses", std::move(w)}};
}

json worlds_json(const WorldSet& ws) {
  json out = json::array();
  for (int w : ws.worlds()) out.push_back(w);
  return out;
}

void emit(bool as_json, const json& machine, const std::string& human) {
  if (as_json)
    std::cout << machine.dump() << "\n";
  else
    std::cout << human << "\n";
}

// demo helpers: every claim is recomputed, a false claim fails the demo

int claims_failed = 0;

void claim(const std::string& text, bool verdict) {
  std::cout << (verdict ? "  [ok] " : "  [FAIL] ") << text << "\n";
  if (!verdict) ++claims_failed;
}

std::string data_dir;

int demo_prop1_necessity() {
  Model m = load_model(data_dir + "/prop1_necessity.json");
  std::cout << "5-point necessity model (worlds a..e = 0..4):\n"
            << to_json(m).dump(2) << "\n";
  auto c = classify(m.frame);
  claim("valuation maps letters to closure fixpoints", validate_model(m).ok());
  claim("frame is strongly pseudo-reflexive", c.strongly_pseudo_reflexive);
  claim("frame is weakly pseudo-symmetric", c.weakly_pseudo_symmetric);
  claim("b satisfies top -> p", holds_at(m, parse("top -> p0"), 1));
  claim("c satisfies p -> bot", holds_at(m, parse("p0 -> bot"), 2));
  claim("a satisfies ((top -> p) | q) & ((p -> bot) | q)",
        holds_at(m, parse("((top -> p0) | p1) & ((p0 -> bot) | p1)"), 0));
  claim("a does not satisfy q", !holds_at(m, Formula::letter(1), 0));
  return claims_failed ? kNegative : kOk;
}

int demo_mp_surrogate() {
  Model m = load_model(data_dir + "/mp_surrogate.json");
  std::cout << "3-world surrogate separating the two consequence relations:\n"
            << to_json(m).dump(2) << "\n";
  auto c = classify(m.frame);
  claim("model is a valid box-pre model", validate_model(m).ok());
  claim("frame is in D1 (pseudo-reflexive, pseudo-symmetric)",
        c.pseudo_reflexive && c.pseudo_symmetric);
  claim("world 0 satisfies p and p -> q", holds_at(m, parse("p0 & (p0 -> p1)"), 0));
  claim("world 0 does not satisfy q", !holds_at(m, Formula::letter(1), 0));
  claim("no D2 countermodel to modus ponens on up to 3 worlds",
        !find_countermodel({parse("p0"), parse("p0 -> p1")}, parse("p1"), ModelClass::d2(), 3)
             .has_value());
  return claims_failed ? kNegative : kOk;
}

int demo_example(int which) {
  bool second = which == 2;
  std::vector<Formula> gamma;
  Formula goal = second ? Formula::letter(4) : Formula::letter(2);
  if (second) {
    Formula d = parse("(p0 -> p2) | ((p1 -> p3) | p4)");
    gamma = {parse("(top -> p0) | p4"), parse("(top -> p1) | p4"),
             Formula::disj(Formula::imp(Formula::top(), d), goal), parse("(p2 -> bot) | p4"),
             parse("(p3 -> bot) | p4")};
  } else {
    gamma = {parse("(top -> p0) | ((top -> p1) | p2)"), parse("(p0 -> bot) | p2"),
             parse("(p1 -> bot) | p2")};
  }
  std::cout << "premise set:\n";
  for (const Formula& f : gamma) std::cout << "  " << print(f) << "\n";
  ModelClass cls = second ? ModelClass::d2() : ModelClass::d1();
  claim(std::string("no countermodel over ") + (second ? "D2" : "D1") + " on up to 3 worlds",
        !find_countermodel(gamma, goal, cls, 3).has_value());

  IFormulaSet premises =
      iformula_set_from_json(load_json(data_dir + (second ? "/example2_premises.json"
                                                          : "/example1_premises.json")));
  claim("premise file matches i_gamma of the premise set",
        premises == i_gamma(FormulaSet(gamma.begin(), gamma.end()), goal));
  ISystem sys = second ? ISystem::I2(goal) : ISystem::I1();
  IFormula ibot({Formula::top()}, {Formula::bot()});
  auto res = saturate(premises, ibot, sys);
  claim("saturation proves {top} => {bot} from the premises", res.found());
  if (res.found()) {
    auto chk = check_ideriv(*res.derivation, sys);
    claim("the returned certificate is accepted with assumptions among the premises",
          chk.ok && std::includes(premises.begin(), premises.end(), chk.assumptions.begin(),
                                  chk.assumptions.end()));
  }
  return claims_failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for fundamental propositional logic with strict implication"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
#ifdef FPL_DATA_DIR
  data_dir = FPL_DATA_DIR;
#endif
  app.add_option("--data-dir", data_dir, "directory with the bundled demo assets");

  std::string model_path, formula_text, proof_path, system_name = "K", gamma_text;
  std::string class_name = "all", goal_text, premises_path, demo_name;
  std::vector<std::string> assume_texts;
  int max_n = 3;
  size_t max_steps = 10000;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a model");
  eval_cmd->add_option("--model", model_path)->required();
  eval_cmd->add_option("--formula", formula_text)->required();

  auto* checkm = app.add_subcommand("check-model", "validate a box-pre model file");
  checkm->add_option("file", model_path)->required();

  auto* classifyc = app.add_subcommand("classify-frame", "report the six frame properties");
  classifyc->add_option("file", model_path)->required();

  auto* findc = app.add_subcommand("find-countermodel", "search the finite model classes");
  findc->add_option("--class", class_name)->check(CLI::IsMember({"all", "d1", "d2"}));
  findc->add_option("--max-n", max_n)->check(CLI::Range(1, 4));
  findc->add_option("--assume", assume_texts);
  findc->add_option("--goal", goal_text)->required();

  auto* checkp = app.add_subcommand("check-proof", "check a derivation certificate");
  checkp->add_option("--system", system_name)->check(CLI::IsMember({"K", "F1", "F2"}));
  checkp->add_option("file", proof_path)->required();

  auto* checkip = app.add_subcommand("check-iproof", "check an i-derivation certificate");
  checkip->add_option("--system", system_name)->check(CLI::IsMember({"I1", "I2"}));
  checkip->add_option("--gamma", gamma_text);
  checkip->add_option("file", proof_path)->required();

  auto* provei = app.add_subcommand("prove-i", "bounded saturation prover for i-formulas");
  provei->add_option("--system", system_name)->check(CLI::IsMember({"I1", "I2"}));
  provei->add_option("--gamma", gamma_text);
  provei->add_option("--goal", goal_text)->required();
  provei->add_option("--premises", premises_path)->required();
  provei->add_option("--max-steps", max_steps);

  auto* demo = app.add_subcommand("demo", "replay the bundled artifacts");
  demo->add_option("name", demo_name)
      ->required()
      ->check(CLI::IsMember({"prop1-necessity", "mp-surrogate", "example1", "example2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval_cmd) {
      Model m = load_model(model_path);
      WorldSet ws = eval(m, parse_or_fail(formula_text));
      emit(as_json, json{{"worlds", worlds_json(ws)}}, worlds_json(ws).dump());
      return kOk;
    }

    if (*checkm) {
      Model m = load_model(model_path);
      auto rep = validate_model(m);
      json bad = json::array();
      for (unsigned p : rep.bad_letters) bad.push_back("p" + std::to_string(p));
      emit(as_json, json{{"ok", rep.ok()}, {"bad_letters", bad}},
           rep.ok() ? "ok: every letter maps to a closure fixpoint"
                    : "invalid: non-fixpoint letters " + bad.dump());
      return rep.ok() ? kOk : kNegative;
    }

    if (*classifyc) {
      Model m = load_model(model_path, /*allow_bare_frame=*/true);
      json c = classification_json(classify(m.frame));
      emit(as_json, c, c.dump(2));
      return kOk;
    }

    if (*findc) {
      std::vector<Formula> assumptions;
      for (const std::string& t : assume_texts) assumptions.push_back(parse_or_fail(t));
      auto report =
          find_countermodel(assumptions, parse_or_fail(goal_text), class_by_name(class_name), max_n);
      if (!report) {
        emit(as_json, json{{"found", false}, {"max_n", max_n}},
             "no countermodel up to " + std::to_string(max_n) + " worlds (not a validity proof)");
        return kOk;
      }
      json j{{"found", true},
             {"model", to_json(report->model)},
             {"world", report->world},
             {"refuted", print(report->refuted)},
             {"classification", classification_json(report->class_certificate)}};
      emit(as_json, j,
           "countermodel found at world " + std::to_string(report->world) + ":\n" +
               to_json(report->model).dump(2));
      return kNegative;
    }

    if (*checkp) {
      System sys = system_name == "F1" ? System::F1
                 : system_name == "F2" ? System::F2
                                       : System::K;
      Derivation d = derivation_from_json(load_json(proof_path));
      CheckResult res = check_derivation(d, sys);
      emit(as_json, json{{"ok", res.ok}, {"reason", res.reason}, {"path", res.path}},
           res.ok ? "accepted" : "rejected at " + res.path + ": " + res.reason);
      return res.ok ? kOk : kNegative;
    }

    if (*checkip || *provei) {
      bool i2 = system_name == "I2";
      if (i2 == gamma_text.empty())
        throw Failure{kUsage, "--gamma is required for I2 and meaningless for I1"};
      ISystem sys = i2 ? ISystem::I2(parse_or_fail(gamma_text)) : ISystem::I1();

      if (*checkip) {
        IDerivation d = ideriv_from_json(load_json(proof_path));
        ICheckResult res = check_ideriv(d, sys);
        json assumptions = json::array();
        for (const IFormula& a : res.assumptions) assumptions.push_back(print(a));
        emit(as_json,
             json{{"ok", res.ok},
                  {"reason", res.reason},
                  {"path", res.path},
                  {"assumptions", assumptions}},
             res.ok ? "accepted with open assumptions " + assumptions.dump()
                    : "rejected at " + res.path + ": " + res.reason);
        return res.ok ? kOk : kNegative;
      }

      IFormulaSet premises = iformula_set_from_json(load_json(premises_path));
      IFormula goal = [&] {
        try {
          return parse_iformula(goal_text);
        } catch (const ParseError& e) {
          throw Failure{kUsage, std::string("bad goal: ") + e.what()};
        }
      }();
      auto res = saturate(premises, goal, sys, max_steps);
      if (res.found()) {
        emit(as_json, json{{"status", "found"}, {"certificate", to_json(*res.derivation)}},
             "proved; certificate:\n" + to_json(*res.derivation).dump(2));
        return kOk;
      }
      const char* status =
          res.status == SaturateStatus::Saturated ? "saturated" : "budget-exhausted";
      emit(as_json, json{{"status", status}, {"steps", res.steps}},
           std::string("not proved (") + status + " after " + std::to_string(res.steps) +
               " facts); not a refutation");
      return kNegative;
    }

    if (*demo) {
      if (demo_name == "prop1-necessity") return demo_prop1_necessity();
      if (demo_name == "mp-surrogate") return demo_mp_surrogate();
      return demo_example(demo_name == "example2" ? 2 : 1);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
