#ifndef FPL_PARSE_HPP
#define FPL_PARSE_HPP

#include <stdexcept>
#include <string>

#include "fpl/formula.hpp"

namespace fpl {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(std::string msg, size_t pos)
      : std::runtime_error(std::move(msg) + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Grammar: atoms p<digits>, bot, top; unary ~; binary &, |, ->; parentheses.
// Precedence ~ > & = | > ->, with -> right-associative. & and | have equal
// precedence, so mixing them without parentheses is a parse error. Chains of
// the same connective associate to the left.
Formula parse(const std::string& text);

// "{f1, f2} => {g1, g2}"
IFormula parse_iformula(const std::string& text);

// Inverse of parse: parse(print(f)) == f. Emits ~ and top sugar.
std::string print(const Formula& f);
std::string print(const IFormula& f);

}  // namespace fpl

#endif
