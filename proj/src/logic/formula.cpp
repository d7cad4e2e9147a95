#include "anaprop/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace anaprop {

std::string bound_variable(int i) { return "z" + std::to_string(i); }

Term Term::variable(std::string name) {
  return Term{Kind::Variable, std::move(name), {}};
}

Term Term::constant(std::string name) {
  return Term{Kind::Constant, std::move(name), {}};
}

Term Term::apply(std::string function, std::vector<Term> args) {
  return Term{Kind::Application, std::move(function), std::move(args)};
}

int Term::depth() const {
  int d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return kind == Kind::Application ? d + 1 : 0;
}

Formula Formula::equals(Term lhs, Term rhs) {
  Formula f;
  f.kind = Kind::Equality;
  f.terms = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula Formula::relation(std::string name, std::vector<Term> args) {
  Formula f;
  f.kind = Kind::Relation;
  f.symbol = std::move(name);
  f.terms = std::move(args);
  return f;
}

namespace {

Formula binary(Formula::Kind kind, Formula lhs, Formula rhs) {
  Formula f;
  f.kind = kind;
  f.children.reserve(2);
  f.children.push_back(std::move(lhs));
  f.children.push_back(std::move(rhs));
  return f;
}

Formula unary(Formula::Kind kind, std::string var, Formula body) {
  Formula f;
  f.kind = kind;
  f.symbol = std::move(var);
  f.children.push_back(std::move(body));
  return f;
}

}  // namespace

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}

Formula Formula::negation(Formula body) { return unary(Kind::Not, {}, std::move(body)); }

Formula Formula::exists(std::string var, Formula body) {
  return unary(Kind::Exists, std::move(var), std::move(body));
}

Formula Formula::forall(std::string var, Formula body) {
  return unary(Kind::Forall, std::move(var), std::move(body));
}

Formula Formula::conjunction_of(std::vector<Formula> conjuncts) {
  if (conjuncts.empty()) throw std::invalid_argument("empty conjunction");
  Formula acc = std::move(conjuncts.front());
  for (std::size_t i = 1; i < conjuncts.size(); ++i)
    acc = conjunction(std::move(acc), std::move(conjuncts[i]));
  return acc;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Term& t) {
  if (t.kind != Term::Kind::Application) return t.symbol;
  std::string out = t.symbol + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += to_string(t.args[i]);
  }
  return out + ")";
}

namespace {

enum class Slot { Top, Left, Right };

bool needs_parens(const Formula& parent, const Formula& child, Slot slot) {
  using K = Formula::Kind;
  if (child.is_quantifier()) return true;
  if (parent.kind == K::And) {
    if (child.kind == K::Or) return true;
    return slot == Slot::Right && child.kind == K::And;
  }
  if (parent.kind == K::Or) return slot == Slot::Right && child.kind == K::Or;
  return false;
}

void print(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Equality:
      out += to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
      return;
    case K::Relation:
      if (f.terms.size() == 2) {
        out += to_string(f.terms[0]) + " " + f.symbol + " " + to_string(f.terms[1]);
      } else {
        out += f.symbol + "(";
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
          if (i) out += ",";
          out += to_string(f.terms[i]);
        }
        out += ")";
      }
      return;
    case K::And:
    case K::Or: {
      const char* op = f.kind == K::And ? " & " : " | ";
      for (int side = 0; side < 2; ++side) {
        const Formula& c = f.children[side];
        bool wrap = needs_parens(f, c, side == 0 ? Slot::Left : Slot::Right);
        if (side) out += op;
        if (wrap) out += "(";
        print(c, out);
        if (wrap) out += ")";
      }
      return;
    }
    case K::Not:
      out += "!(";
      print(f.children[0], out);
      out += ")";
      return;
    case K::Exists:
    case K::Forall:
      out += f.kind == K::Exists ? "exists " : "forall ";
      out += f.symbol + " . ";
      print(f.children[0], out);
      return;
  }
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Variable) out.insert(t.symbol);
  for (const auto& a : t.args) collect_vars(a, out);
}

void collect_consts(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Constant) out.insert(t.symbol);
  for (const auto& a : t.args) collect_consts(a, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  if (f.is_atom()) {
    std::set<std::string> vs;
    for (const auto& t : f.terms) collect_vars(t, vs);
    for (const auto& v : vs)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  if (f.is_quantifier()) {
    bool fresh = bound.insert(f.symbol).second;
    collect_free(f.children[0], bound, out);
    if (fresh) bound.erase(f.symbol);
    return;
  }
  for (const auto& c : f.children) collect_free(c, bound, out);
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Analysis

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  if (f.is_quantifier()) out.insert(f.symbol);
  for (const auto& t : f.terms) collect_vars(t, out);
  for (const auto& c : f.children) out.merge(variables(c));
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> constants(const Term& t) {
  std::set<std::string> out;
  collect_consts(t, out);
  return out;
}

std::set<std::string> constants(const Formula& f) {
  std::set<std::string> out;
  for (const auto& t : f.terms) collect_consts(t, out);
  for (const auto& c : f.children) out.merge(constants(c));
  return out;
}

bool is_conjunctive(const Formula& f) {
  if (f.kind == Formula::Kind::Not || f.kind == Formula::Kind::Or) return false;
  return std::all_of(f.children.begin(), f.children.end(),
                     [](const Formula& c) { return is_conjunctive(c); });
}

bool is_two_formula(const Formula& f) {
  return free_variables(f) == std::set<std::string>{kVarX, kVarY};
}

bool is_c_term(const Term& t) {
  return variables(t) == std::set<std::string>{kVarX, kVarY};
}

int atom_count(const Formula& f) {
  if (f.is_atom()) return 1;
  int n = 0;
  for (const auto& c : f.children) n += atom_count(c);
  return n;
}

int max_term_depth(const Formula& f) {
  int d = 0;
  for (const auto& t : f.terms) d = std::max(d, t.depth());
  for (const auto& c : f.children) d = std::max(d, max_term_depth(c));
  return d;
}

int quantifier_count(const Formula& f) {
  int n = f.is_quantifier() ? 1 : 0;
  for (const auto& c : f.children) n += quantifier_count(c);
  return n;
}

}  // namespace anaprop
