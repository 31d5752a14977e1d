#ifndef FPL_FORMULA_HPP
#define FPL_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpl {

// Immutable formula tree over {bot, letters, &, |, ->}.
// Negation and top are not constructors: ~a is a -> bot, top is bot -> bot.
class Formula {
public:
  enum class Kind : uint8_t { Bot, Letter, And, Or, Imp };

  static Formula bot();
  static Formula letter(unsigned index);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula neg(Formula a) { return imp(std::move(a), bot()); }
  static Formula top() { return imp(bot(), bot()); }

  Kind kind() const { return node_->kind; }
  unsigned index() const;  // Letter only
  Formula lhs() const;     // And/Or/Imp
  Formula rhs() const;

  bool is(Kind k) const { return node_->kind == k; }
  bool is_neg() const { return is(Kind::Imp) && rhs().is(Kind::Bot); }
  bool is_top() const { return is(Kind::Imp) && lhs().is(Kind::Bot) && rhs().is(Kind::Bot); }

  bool operator==(const Formula& o) const { return compare(o) == 0; }
  std::strong_ordering operator<=>(const Formula& o) const {
    int c = compare(o);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }
  int compare(const Formula& o) const;

private:
  struct Node {
    Kind kind;
    unsigned index = 0;
    std::shared_ptr<const Node> l, r;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

// Right-nested folds; fold_and({}) is top, fold_or of an empty list is invalid.
Formula fold_and(std::span<const Formula> fs);
Formula fold_or(std::span<const Formula> fs);
inline Formula fold_and(const std::vector<Formula>& fs) { return fold_and(std::span<const Formula>(fs)); }
inline Formula fold_or(const std::vector<Formula>& fs) { return fold_or(std::span<const Formula>(fs)); }
Formula fold_and(const FormulaSet& fs);
Formula fold_or(const FormulaSet& fs);

// Subformula closure, including f itself.
FormulaSet subformulas(const Formula& f);
FormulaSet subformulas(const FormulaSet& fs);

// Letters occurring in f.
std::set<unsigned> letters_of(const Formula& f);

// A sequent between non-empty finite sets of formulas ("Delta => Theta").
class IFormula {
public:
  IFormula(FormulaSet ante, FormulaSet succ);

  const FormulaSet& ante() const { return ante_; }
  const FormulaSet& succ() const { return succ_; }

  bool operator==(const IFormula&) const = default;
  auto operator<=>(const IFormula&) const = default;

private:
  FormulaSet ante_, succ_;
};

using IFormulaSet = std::set<IFormula>;

// One reading of a formula's right |-spine as (p1->q1) | (... | tail).
struct Decomposition {
  std::vector<std::pair<Formula, Formula>> pairs;  // non-empty
  Formula tail;

  // The implication part and the reconstructed source formula.
  IFormula iformula() const;
  Formula reconstruct() const;
};

// Every reading of theta's right |-spine as implications followed by gamma.
std::vector<Decomposition> decompose(const Formula& theta, const Formula& gamma);

// Union of the i-formulas extracted from each member of gamma-shaped Gamma.
IFormulaSet i_gamma(const FormulaSet& gamma_set, const Formula& gamma);

}  // namespace fpl

#endif
