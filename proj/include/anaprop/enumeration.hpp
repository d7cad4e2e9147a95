#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "anaprop/dependency.hpp"
#include "anaprop/formula.hpp"
#include "anaprop/signature.hpp"
#include "anaprop/structure.hpp"

namespace anaprop {

struct Bounds {
  int max_atoms = 2;
  int max_term_depth = 2;
  int max_quantifiers = 1;
  bool allow_exists = true;
  bool allow_forall = true;
  bool allow_constants = true;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

std::string to_string(const Bounds& b);
// "exists,forall", "exists", "forall" or "" (no quantifiers).
std::string quantifier_kinds(const Bounds& b);

struct FragmentSpec {
  enum class Kind { CFormula, Equational, Path };

  Kind kind = Kind::CFormula;
  Bounds bounds;
  // Path fragment: largest n of pi_n; 0 picks 2*max(|A|,|B|)+1, beyond which
  // no new extensions appear.
  int max_path_length = 0;

  static FragmentSpec cformula(Bounds b = {}) { return {Kind::CFormula, b, 0}; }
  static FragmentSpec equational(Bounds b = {}) { return {Kind::Equational, b, 0}; }
  static FragmentSpec path(int max_length = 0) { return {Kind::Path, {}, max_length}; }
};

std::string to_string(FragmentSpec::Kind k);

// pi_0 = (x = y), pi_1 = x E y, pi_n = exists z1..z(n-1) . x E z1 & ... & z(n-1) E y.
Formula path_formula(int n, const std::string& relation);

// Prenex candidate Q1 z1 ... Qm zm . (A1 & ... & Ak); bit i of forall_mask
// makes z(i+1) universal. Atom ids index CandidateSet::atoms(m).
struct Candidate {
  int quantifiers = 0;
  std::uint32_t forall_mask = 0;
  std::vector<std::uint32_t> atoms;
};

class CandidateSet {
 public:
  const Signature& signature() const { return sig_; }
  const std::vector<Formula>& atoms(int m) const { return atoms_.at(m); }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  std::size_t size() const { return candidates_.size(); }
  int max_quantifiers() const { return static_cast<int>(atoms_.size()) - 1; }

  Formula formula(const Candidate& c) const;
  Formula formula(std::size_t i) const { return formula(candidates_.at(i)); }

 private:
  friend CandidateSet enumerate_candidates(const Signature&, const FragmentSpec&,
                                           const DependencyOptions&);
  Signature sig_;
  std::vector<std::vector<Formula>> atoms_;  // by number of bound variables
  std::vector<Candidate> candidates_;
};

// One representative per class of prenex conjunctive connected 2-formulas
// within the bounds, up to reordering of conjuncts and renaming of bound
// variables inside blocks of equal quantifiers. Reflexive equalities s = s
// are never generated. Parameter constants are never used. Ordered by number
// of quantifiers, then number of atoms, then atom ids, then prefix.
// The path fragment is not enumerated here (see build_index).
CandidateSet enumerate_candidates(const Signature& sig, const FragmentSpec& frag,
                                  const DependencyOptions& dep = {});
std::vector<Formula> enumerate_cformulas(const Signature& sig, const Bounds& b);

// Truth tables of all candidate atoms over universe^(2+m) in one structure.
// Table index is ((x*n + y)*n + z1)*n + ... + zm.
class TableEvaluator {
 public:
  TableEvaluator(const FiniteStructure& s, const CandidateSet& set);
  Extension extension(const Candidate& c) const;

 private:
  std::size_t n_;
  std::vector<std::vector<boost::dynamic_bitset<>>> atom_tables_;
};

}  // namespace anaprop
