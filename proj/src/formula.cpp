#include "fpl/formula.hpp"

namespace fpl {

Formula Formula::bot() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Bot});
  return Formula(n);
}

Formula Formula::letter(unsigned index) {
  return Formula(std::make_shared<const Node>(Node{Kind::Letter, index}));
}

Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, 0, std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, 0, std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::imp(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::Imp, 0, std::move(l.node_), std::move(r.node_)}));
}

unsigned Formula::index() const {
  if (!is(Kind::Letter)) throw std::logic_error("Formula::index on non-letter");
  return node_->index;
}

Formula Formula::lhs() const {
  if (is(Kind::Bot) || is(Kind::Letter)) throw std::logic_error("Formula::lhs on leaf");
  return Formula(node_->l);
}

Formula Formula::rhs() const {
  if (is(Kind::Bot) || is(Kind::Letter)) throw std::logic_error("Formula::rhs on leaf");
  return Formula(node_->r);
}

int Formula::compare(const Formula& o) const {
  if (node_ == o.node_) return 0;
  if (node_->kind != o.node_->kind)
    return static_cast<int>(node_->kind) < static_cast<int>(o.node_->kind) ? -1 : 1;
  switch (node_->kind) {
    case Kind::Bot:
      return 0;
    case Kind::Letter:
      return node_->index < o.node_->index ? -1 : node_->index > o.node_->index ? 1 : 0;
    default: {
      int c = lhs().compare(o.lhs());
      return c != 0 ? c : rhs().compare(o.rhs());
    }
  }
}

Formula fold_and(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = Formula::conj(fs[i], acc);
  return acc;
}

Formula fold_or(std::span<const Formula> fs) {
  if (fs.empty()) throw std::logic_error("fold_or of empty list");
  Formula acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = Formula::disj(fs[i], acc);
  return acc;
}

Formula fold_and(const FormulaSet& fs) {
  return fold_and(std::vector<Formula>(fs.begin(), fs.end()));
}

Formula fold_or(const FormulaSet& fs) {
  return fold_or(std::vector<Formula>(fs.begin(), fs.end()));
}

static void collect_sub(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Letter:
      break;
    default:
      collect_sub(f.lhs(), out);
      collect_sub(f.rhs(), out);
  }
}

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_sub(f, out);
  return out;
}

FormulaSet subformulas(const FormulaSet& fs) {
  FormulaSet out;
  for (const auto& f : fs) collect_sub(f, out);
  return out;
}

std::set<unsigned> letters_of(const Formula& f) {
  std::set<unsigned> out;
  for (const auto& g : subformulas(f))
    if (g.is(Formula::Kind::Letter)) out.insert(g.index());
  return out;
}

IFormula::IFormula(FormulaSet ante, FormulaSet succ)
    : ante_(std::move(ante)), succ_(std::move(succ)) {
  if (ante_.empty() || succ_.empty())
    throw std::invalid_argument("i-formula sides must be non-empty");
}

IFormula Decomposition::iformula() const {
  FormulaSet a, s;
  for (const auto& [p, q] : pairs) {
    a.insert(p);
    s.insert(q);
  }
  return IFormula(std::move(a), std::move(s));
}

Formula Decomposition::reconstruct() const {
  Formula acc = tail;
  for (size_t i = pairs.size(); i-- > 0;)
    acc = Formula::disj(Formula::imp(pairs[i].first, pairs[i].second), acc);
  return acc;
}

std::vector<Decomposition> decompose(const Formula& theta, const Formula& gamma) {
  std::vector<Decomposition> out;
  std::vector<std::pair<Formula, Formula>> pairs;
  Formula cur = theta;
  while (cur.is(Formula::Kind::Or)) {
    const Formula& d = cur.lhs();
    if (!d.is(Formula::Kind::Imp)) break;
    pairs.emplace_back(d.lhs(), d.rhs());
    cur = cur.rhs();
    if (cur == gamma) out.push_back(Decomposition{pairs, cur});
  }
  return out;
}

IFormulaSet i_gamma(const FormulaSet& gamma_set, const Formula& gamma) {
  IFormulaSet out;
  for (const auto& theta : gamma_set)
    for (const auto& d : decompose(theta, gamma)) out.insert(d.iformula());
  return out;
}

}  // namespace fpl
