#include "fpl/search.hpp"

#include <algorithm>
#include <random>

namespace fpl {
namespace {

constexpr int kMaxN = 4;

// Relation bits after renaming worlds through perm.
uint64_t permute_bits(int n, uint64_t bits, const std::vector<int>& perm) {
  uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((bits >> (i * n + j)) & 1) out |= uint64_t{1} << (perm[i] * n + perm[j]);
  return out;
}

bool is_orbit_minimum(int n, uint64_t bits) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  while (std::next_permutation(perm.begin(), perm.end()))
    if (permute_bits(n, bits, perm) < bits) return false;
  return true;
}

std::set<unsigned> query_letters(const std::vector<Formula>& assumptions, const Formula& goal) {
  std::set<unsigned> out = letters_of(goal);
  for (const Formula& a : assumptions) {
    auto ls = letters_of(a);
    out.insert(ls.begin(), ls.end());
  }
  return out;
}

}  // namespace

bool ModelClass::admits(const FrameClassification& c) const {
  switch (tag) {
    case Tag::AllBoxPre: return true;
    case Tag::D1: return c.pseudo_reflexive && c.pseudo_symmetric;
    case Tag::D2: return c.reflexive && c.pseudo_symmetric;
    case Tag::Custom: return predicate(c);
  }
  return false;
}

std::vector<FiniteFrame> enumerate_frames(int n, const ModelClass& cls) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("frame enumeration bound exceeded");
  std::vector<FiniteFrame> out;
  if (n == 0) return out;
  uint64_t limit = uint64_t{1} << (n * n);
  for (uint64_t bits = 0; bits < limit; ++bits) {
    if (n == 4 && !is_orbit_minimum(n, bits)) continue;
    FiniteFrame f = FiniteFrame::from_bits(n, bits);
    if (cls.admits(classify(f))) out.push_back(std::move(f));
  }
  return out;
}

void enumerate_models(int n, const std::vector<unsigned>& letters, const ModelClass& cls,
                      const std::function<bool(const Model&)>& visit) {
  for (const FiniteFrame& f : enumerate_frames(n, cls)) {
    std::vector<WorldSet> fps = enumerate_fixpoints(f);
    std::vector<size_t> pick(letters.size(), 0);
    while (true) {
      Model m{f, {}};
      for (size_t i = 0; i < letters.size(); ++i) m.valuation.emplace(letters[i], fps[pick[i]]);
      if (!visit(m)) return;
      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < fps.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
}

std::optional<CountermodelReport> find_countermodel(const std::vector<Formula>& assumptions,
                                                    const Formula& goal, const ModelClass& cls,
                                                    int max_n) {
  auto letter_set = query_letters(assumptions, goal);
  std::vector<unsigned> letters(letter_set.begin(), letter_set.end());
  std::optional<CountermodelReport> report;
  for (int n = 1; n <= max_n && !report; ++n) {
    enumerate_models(n, letters, cls, [&](const Model& m) {
      WorldSet candidates = ~eval(m, goal);
      for (const Formula& a : assumptions) {
        if (candidates.empty_set()) return true;
        candidates = candidates & eval(m, a);
      }
      if (candidates.empty_set()) return true;
      report = CountermodelReport{m, candidates.worlds().front(), assumptions, goal,
                                  classify(m.frame)};
      return false;
    });
  }
  if (report) {
    // self-check before handing the report out
    for (const Formula& a : report->satisfied)
      if (!holds_at(report->model, a, report->world))
        throw std::logic_error("countermodel report failed re-evaluation");
    if (holds_at(report->model, report->refuted, report->world) ||
        !cls.admits(report->class_certificate))
      throw std::logic_error("countermodel report failed re-evaluation");
  }
  return report;
}

RuleInstanceResult check_rule_instance(const Model& m, const std::vector<Sequent>& premises,
                                       const Sequent& conclusion) {
  for (const Sequent& s : premises)
    if (!sequent_holds(m, s.lhs, s.rhs)) return {};
  WorldSet escape = eval(m, conclusion.lhs) & ~eval(m, conclusion.rhs);
  if (escape.empty_set()) return {};
  return {false, escape.worlds().front()};
}

Model random_model(const ModelClass& cls, int n, const std::vector<unsigned>& letters,
                   uint64_t seed, int rejection_budget) {
  if (n < 1 || n > 62) throw std::invalid_argument("random_model size out of range");
  std::mt19937_64 rng(seed);
  uint64_t mask = (n * n >= 64) ? ~uint64_t{0} : (uint64_t{1} << (n * n)) - 1;
  for (int tries = 0; tries < rejection_budget; ++tries) {
    FiniteFrame f = FiniteFrame::from_bits(n, rng() & mask);
    if (!cls.admits(classify(f))) continue;
    std::vector<WorldSet> fps = enumerate_fixpoints(f);
    Model m{std::move(f), {}};
    for (unsigned p : letters) m.valuation.emplace(p, fps[rng() % fps.size()]);
    return m;
  }
  throw std::runtime_error("random_model: rejection budget exhausted for the class");
}

}  // namespace fpl
