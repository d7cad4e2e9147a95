#include "anaprop/parser.hpp"

#include <cctype>
#include <map>
#include <set>

namespace anaprop {

namespace detail {

std::vector<Token> tokenize(std::string_view text, std::string_view punct) {
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ident_char(c)) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({Token::Kind::Ident, std::string(text.substr(start, i - start)), start});
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::Punct, "->", i});
      i += 2;
    } else if (punct.find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

}  // namespace detail

namespace {

using detail::Token;

bool is_keyword(const std::string& s) { return s == "exists" || s == "forall"; }

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Signature& sig)
      : tokens_(detail::tokenize(text, "()=&|!.,")), sig_(sig) {}

  Formula parse_top() {
    Formula f = formula();
    expect_end();
    check_bound_against_free(f);
    return f;
  }

  Term parse_term_top() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_punct(const char* p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }
  void expect(const char* p) {
    if (!at_punct(p))
      throw ParseError(std::string("expected '") + p + "'", peek().pos);
    next();
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
  }

  Formula formula() {
    if (peek().kind == Token::Kind::Ident && is_keyword(peek().text)) return quantified();
    return disjunction();
  }

  Formula quantified() {
    const Token& kw = next();
    const Token& var = next();
    if (var.kind != Token::Kind::Ident || is_keyword(var.text) || sig_.kind_of(var.text))
      throw ParseError("expected a variable after '" + kw.text + "'", var.pos);
    if (!bound_.emplace(var.text, var.pos).second)
      throw ParseError("duplicate quantified variable '" + var.text + "'", var.pos);
    expect(".");
    Formula body = formula();
    return kw.text == "exists" ? Formula::exists(var.text, std::move(body))
                               : Formula::forall(var.text, std::move(body));
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (at_punct("|")) {
      next();
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at_punct("&")) {
      next();
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (at_punct("!")) {
      next();
      return Formula::negation(unary());
    }
    if (at_punct("(")) {
      next();
      Formula f = formula();
      expect(")");
      return f;
    }
    if (peek().kind == Token::Kind::Ident && is_keyword(peek().text)) return quantified();
    return atom();
  }

  Formula atom() {
    const Token& head = peek();
    if (head.kind == Token::Kind::Ident) {
      if (auto r = sig_.relation_index(head.text)) {
        next();
        const Symbol& sym = sig_.relations()[*r];
        if (!at_punct("("))
          throw ParseError("relation '" + sym.name + "' used as a term", head.pos);
        auto args = arguments(sym, head.pos);
        return Formula::relation(sym.name, std::move(args));
      }
    }
    Term lhs = term();
    if (at_punct("=")) {
      next();
      return Formula::equals(std::move(lhs), term());
    }
    const Token& op = peek();
    if (op.kind == Token::Kind::Ident) {
      auto r = sig_.relation_index(op.text);
      if (!r) throw ParseError("undeclared relation symbol '" + op.text + "'", op.pos);
      const Symbol& sym = sig_.relations()[*r];
      if (sym.arity != 2)
        throw ParseError("infix use of non-binary relation '" + sym.name + "'", op.pos);
      next();
      std::vector<Term> args;
      args.push_back(std::move(lhs));
      args.push_back(term());
      return Formula::relation(sym.name, std::move(args));
    }
    throw ParseError("expected '=' or a binary relation", op.pos);
  }

  std::vector<Term> arguments(const Symbol& sym, std::size_t at) {
    expect("(");
    std::vector<Term> args;
    if (!at_punct(")")) {
      args.push_back(term());
      while (at_punct(",")) {
        next();
        args.push_back(term());
      }
    }
    expect(")");
    if (static_cast<int>(args.size()) != sym.arity)
      throw ParseError("arity mismatch for '" + sym.name + "': expected " +
                           std::to_string(sym.arity) + ", got " + std::to_string(args.size()),
                       at);
    return args;
  }

  Term term() {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Ident) throw ParseError("expected a term", tok.pos);
    next();
    auto kind = sig_.kind_of(tok.text);
    if (kind == SymbolKind::Function) {
      const Symbol& sym = sig_.functions()[*sig_.function_index(tok.text)];
      return Term::apply(sym.name, arguments(sym, tok.pos));
    }
    if (kind == SymbolKind::Relation)
      throw ParseError("relation '" + tok.text + "' used as a term", tok.pos);
    if (at_punct("("))
      throw ParseError("undeclared function symbol '" + tok.text + "'", tok.pos);
    if (kind == SymbolKind::Constant) return Term::constant(tok.text);
    if (is_keyword(tok.text) || !std::isalpha(static_cast<unsigned char>(tok.text[0])))
      throw ParseError("undeclared symbol '" + tok.text + "'", tok.pos);
    return Term::variable(tok.text);
  }

  void check_bound_against_free(const Formula& f) const {
    for (const auto& v : free_variables(f)) {
      auto it = bound_.find(v);
      if (it != bound_.end())
        throw ParseError("duplicate quantified variable '" + v + "' (also free)", it->second);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  std::map<std::string, std::size_t> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  return FormulaParser(text, sig).parse_top();
}

Term parse_term(std::string_view text, const Signature& sig) {
  return FormulaParser(text, sig).parse_term_top();
}

}  // namespace anaprop
