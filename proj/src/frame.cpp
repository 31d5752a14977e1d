#include "fpl/frame.hpp"

namespace fpl {

std::vector<int> WorldSet::worlds() const {
  std::vector<int> out;
  for (int w = 0; w < size_; ++w)
    if (contains(w)) out.push_back(w);
  return out;
}

FiniteFrame::FiniteFrame(int size, const std::vector<std::pair<int, int>>& relation)
    : FiniteFrame(size) {
  for (auto [i, j] : relation) add_edge(i, j);
}

void FiniteFrame::add_edge(int i, int j) {
  if (i < 0 || i >= size_ || j < 0 || j >= size_)
    throw std::invalid_argument("relation pair out of range");
  succ_[i] |= uint64_t{1} << j;
}

FiniteFrame FiniteFrame::from_bits(int size, uint64_t relation_bits) {
  FiniteFrame f(size);
  for (int i = 0; i < size; ++i)
    f.succ_[i] = (relation_bits >> (i * size)) & ((uint64_t{1} << size) - 1);
  return f;
}

uint64_t FiniteFrame::to_bits() const {
  uint64_t bits = 0;
  for (int i = 0; i < size_; ++i) bits |= succ_[i] << (i * size_);
  return bits;
}

std::vector<std::pair<int, int>> FiniteFrame::relation() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (related(i, j)) out.emplace_back(i, j);
  return out;
}

WorldSet pre(const FiniteFrame& f, const WorldSet& x) {
  if (x.size() != f.size()) throw std::invalid_argument("pre: size mismatch");
  uint64_t bits = 0;
  for (int w = 0; w < f.size(); ++w)
    if (x.contains(w)) bits |= f.successors(w).bits();
  return WorldSet(f.size(), bits);
}

WorldSet box(const FiniteFrame& f, const WorldSet& x) {
  if (x.size() != f.size()) throw std::invalid_argument("box: size mismatch");
  uint64_t bits = 0;
  for (int w = 0; w < f.size(); ++w)
    if (f.successors(w).subset_of(x)) bits |= uint64_t{1} << w;
  return WorldSet(f.size(), bits);
}

WorldSet diamond(const FiniteFrame& f, const WorldSet& x) { return ~box(f, ~x); }

WorldSet closure(const FiniteFrame& f, const WorldSet& x) { return box(f, pre(f, x)); }

bool is_fixpoint(const FiniteFrame& f, const WorldSet& x) { return closure(f, x) == x; }

std::vector<WorldSet> enumerate_fixpoints(const FiniteFrame& f, int exhaustive_bound) {
  if (f.size() > exhaustive_bound)
    throw std::invalid_argument("enumerate_fixpoints: frame exceeds exhaustive bound");
  std::vector<WorldSet> out;
  uint64_t limit = uint64_t{1} << f.size();
  for (uint64_t bits = 0; bits < limit; ++bits) {
    WorldSet x(f.size(), bits);
    if (is_fixpoint(f, x)) out.push_back(x);
  }
  return out;
}

WorldSet fp_meet(const FiniteFrame& f, const WorldSet& x, const WorldSet& y) {
  if (!is_fixpoint(f, x) || !is_fixpoint(f, y))
    throw std::invalid_argument("fp_meet: argument is not a fixpoint");
  return x & y;
}

WorldSet fp_join(const FiniteFrame& f, const WorldSet& x, const WorldSet& y) {
  if (!is_fixpoint(f, x) || !is_fixpoint(f, y))
    throw std::invalid_argument("fp_join: argument is not a fixpoint");
  return closure(f, x | y);
}

}  // namespace fpl
