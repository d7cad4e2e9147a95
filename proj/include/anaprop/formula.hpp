#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace anaprop {

// Reserved free variables of 2-formulas.
inline constexpr const char* kVarX = "x";
inline constexpr const char* kVarY = "y";

// Name of the i-th bound variable in the canonical pool (1-based).
std::string bound_variable(int i);

struct Term {
  enum class Kind : std::uint8_t { Variable, Constant, Application };

  Kind kind = Kind::Variable;
  std::string symbol;
  std::vector<Term> args;

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  bool is_variable() const { return kind == Kind::Variable; }
  int depth() const;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
  enum class Kind : std::uint8_t { Equality, Relation, And, Or, Not, Exists, Forall };

  Kind kind = Kind::Equality;
  // Relation name for Relation atoms, bound variable for quantifiers.
  std::string symbol;
  std::vector<Term> terms;
  std::vector<Formula> children;

  static Formula equals(Term lhs, Term rhs);
  static Formula relation(std::string name, std::vector<Term> args);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula negation(Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  // Left-nested conjunction of a non-empty list.
  static Formula conjunction_of(std::vector<Formula> conjuncts);

  bool is_atom() const { return kind == Kind::Equality || kind == Kind::Relation; }
  bool is_quantifier() const { return kind == Kind::Exists || kind == Kind::Forall; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

// Variables of a term, in first-occurrence order collapsed into a set.
std::set<std::string> variables(const Term& t);
// Every variable occurring in f, bound or free, including quantified names.
std::set<std::string> variables(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
std::set<std::string> constants(const Term& t);
std::set<std::string> constants(const Formula& f);

inline std::size_t rank(const Formula& f) { return free_variables(f).size(); }

bool is_conjunctive(const Formula& f);
bool is_two_formula(const Formula& f);
bool is_c_term(const Term& t);

// Number of atomic subformulas.
int atom_count(const Formula& f);
// Maximum term depth over all atoms.
int max_term_depth(const Formula& f);
// Number of quantifier nodes.
int quantifier_count(const Formula& f);

}  // namespace anaprop
