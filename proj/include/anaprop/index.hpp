#pragma once

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "anaprop/enumeration.hpp"
#include "anaprop/structure.hpp"

namespace anaprop {

struct IndexOptions {
  // Keep only the first formula of every (extension in A, extension in B) class.
  bool semantic_collapse = true;
  // Formulas appended after the enumerated ones, evaluated directly. Used
  // for parameter justifications that the enumeration never produces.
  std::vector<Formula> extras;
  DependencyOptions dependency;
};

enum class Side { A, B };

struct JustificationIndex {
  FragmentSpec fragment;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::vector<Formula> formulas;
  std::vector<Extension> ext_a;
  std::vector<Extension> ext_b;
  boost::dynamic_bitset<> trivial;
  // Number of formulas before semantic collapse.
  std::size_t enumerated = 0;
  // types_a[a*|A|+b] has bit i iff (a,b) is in ext_a[i]; likewise for B.
  std::vector<boost::dynamic_bitset<>> types_a;
  std::vector<boost::dynamic_bitset<>> types_b;

  std::size_t size() const { return formulas.size(); }
  std::size_t universe_size(Side s) const { return s == Side::A ? size_a : size_b; }
  // Throws UnknownElementError for elements outside the chosen universe.
  const boost::dynamic_bitset<>& type_bits(Side s, Element a, Element b) const;
};

// Throws SignatureError if A and B differ in signature or the path fragment
// is used outside a single binary relation signature.
JustificationIndex build_index(const FiniteStructure& a, const FiniteStructure& b,
                               const FragmentSpec& frag, const IndexOptions& opts = {});

// Indices i with (a,b) in the extension on the given side, trivial ones included.
std::vector<std::size_t> justification_type(const JustificationIndex& idx, Side side, Element a,
                                            Element b);

}  // namespace anaprop
