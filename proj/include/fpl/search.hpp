#ifndef FPL_SEARCH_HPP
#define FPL_SEARCH_HPP

#include <functional>
#include <optional>

#include "fpl/derivation.hpp"
#include "fpl/frame_props.hpp"

namespace fpl {

// The model classes of the two semantic consequence relations, plus the
// unrestricted box-pre class and an escape hatch for experiments.
struct ModelClass {
  enum class Tag : uint8_t { AllBoxPre, D1, D2, Custom };
  Tag tag = Tag::AllBoxPre;
  std::function<bool(const FrameClassification&)> predicate;  // Custom only

  static ModelClass all() { return {}; }
  static ModelClass d1() { return {Tag::D1, {}}; }
  static ModelClass d2() { return {Tag::D2, {}}; }
  static ModelClass custom(std::function<bool(const FrameClassification&)> p) {
    return {Tag::Custom, std::move(p)};
  }

  bool admits(const FrameClassification& c) const;
};

// Every frame on n worlds admitted by the class, in increasing relation-bits
// order; n = 4 keeps only the lexicographically least frame of each
// isomorphism orbit. n <= 4.
std::vector<FiniteFrame> enumerate_frames(int n, const ModelClass& cls);

// Streams every admitted model: each listed letter ranges over the frame's
// closure fixpoints. The visitor returns false to stop early.
void enumerate_models(int n, const std::vector<unsigned>& letters, const ModelClass& cls,
                      const std::function<bool(const Model&)>& visit);

struct CountermodelReport {
  Model model;
  int world = 0;
  std::vector<Formula> satisfied;  // the assumptions, all true at world
  Formula refuted;
  FrameClassification class_certificate;
};

// First world (in enumeration order) satisfying every assumption and
// refuting the goal, over n = 1..max_n and the letters of the query.
// nullopt is not a validity proof.
std::optional<CountermodelReport> find_countermodel(const std::vector<Formula>& assumptions,
                                                    const Formula& goal, const ModelClass& cls,
                                                    int max_n);

struct RuleInstanceResult {
  bool correct = true;
  int witness = -1;  // conclusion lhs-world escaping the rhs, when incorrect
};

// Correctness of a rule instance at one model: if every premise holds
// (as truth-set inclusion), so must the conclusion.
RuleInstanceResult check_rule_instance(const Model& m, const std::vector<Sequent>& premises,
                                       const Sequent& conclusion);

// Deterministic in seed; rejection-samples frames until the class admits one,
// then draws each letter's value uniformly from the fixpoints. Throws
// std::runtime_error once the rejection budget is spent.
Model random_model(const ModelClass& cls, int n, const std::vector<unsigned>& letters,
                   uint64_t seed, int rejection_budget = 10000);

}  // namespace fpl

#endif
