#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anaprop/formula.hpp"
#include "anaprop/signature.hpp"

namespace anaprop {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Formula grammar (whitespace-insensitive):
//
//   formula := ("exists" | "forall") var "." formula | disj
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "!" unary | "(" formula ")" | quantified | atom
//   atom    := R "(" term,* ")" | term "=" term | term R term
//   term    := c | v | f "(" term,* ")"
//
// Identifiers that are not declared symbols are variables. Quantified
// variables must be pairwise distinct and distinct from the free variables.
Formula parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);

namespace detail {

struct Token {
  enum class Kind { Ident, Punct, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

// Shared by the formula and structure parsers. Identifiers are runs of
// [A-Za-z0-9_']; "->" is a single punctuation token.
std::vector<Token> tokenize(std::string_view text, std::string_view punct);

}  // namespace detail

}  // namespace anaprop
