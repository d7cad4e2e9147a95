#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "anaprop/formula.hpp"
#include "anaprop/signature.hpp"

namespace anaprop {

using Element = std::uint32_t;

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownElementError : public std::runtime_error {
 public:
  explicit UnknownElementError(const std::string& name)
      : std::runtime_error("unknown element '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite L-structure. Elements are the ids 0..size()-1 with printable names.
// Function tables are flat and row-major in the argument tuple; relation
// tables are bit sets indexed the same way.
class FiniteStructure {
 public:
  FiniteStructure(std::string name, Signature sig, std::vector<std::string> universe);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  std::size_t size() const { return names_.size(); }

  const std::string& element_name(Element e) const { return names_.at(e); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Element> find_element(std::string_view name) const;
  // Throws UnknownElementError.
  Element element(std::string_view name) const;

  void set_function(std::string_view f, const std::vector<Element>& args, Element value);
  void add_tuple(std::string_view r, const std::vector<Element>& tuple);
  void set_constant(std::string_view c, Element value);

  // Throws StructureError if some function table or constant is not set.
  void validate() const;

  Element apply(std::size_t f, const Element* args) const;
  Element apply(std::size_t f, const std::vector<Element>& args) const {
    return apply(f, args.data());
  }
  bool holds(std::size_t r, const Element* tuple) const;
  bool holds(std::size_t r, const std::vector<Element>& tuple) const {
    return holds(r, tuple.data());
  }
  Element constant(std::size_t c) const;

  // Copy of this structure over the signature extended by a fresh parameter
  // constant interpreted as e.
  FiniteStructure with_parameter(const std::string& constant, Element e) const;

 private:
  std::size_t offset(const Element* args, int arity) const;

  std::string name_;
  Signature sig_;
  std::vector<std::string> names_;
  std::map<std::string, Element, std::less<>> ids_;
  std::vector<std::vector<Element>> functions_;
  std::vector<boost::dynamic_bitset<>> relations_;
  std::vector<std::optional<Element>> constants_;
};

inline constexpr Element kUnset = static_cast<Element>(-1);

using Assignment = std::map<std::string, Element, std::less<>>;

// Set of element pairs, row-major: bit a*n+b.
class Extension {
 public:
  Extension() = default;
  explicit Extension(std::size_t n) : n_(n), bits_(n * n) {}
  Extension(std::size_t n, boost::dynamic_bitset<> bits) : n_(n), bits_(std::move(bits)) {}

  std::size_t universe_size() const { return n_; }
  bool contains(Element a, Element b) const { return bits_.test(a * n_ + b); }
  void insert(Element a, Element b) { bits_.set(a * n_ + b); }
  bool full() const { return bits_.all(); }
  bool empty() const { return bits_.none(); }
  std::size_t count() const { return bits_.count(); }
  const boost::dynamic_bitset<>& bits() const { return bits_; }

  friend bool operator==(const Extension&, const Extension&) = default;

 private:
  std::size_t n_ = 0;
  boost::dynamic_bitset<> bits_;
};

Element evaluate_term(const FiniteStructure& s, const Term& t, const Assignment& sigma);
bool satisfies(const FiniteStructure& s, const Formula& f, const Assignment& sigma);
// Throws std::invalid_argument unless free_variables(f) is exactly {x, y}.
Extension extension(const FiniteStructure& s, const Formula& f);

// A bijection as the image vector: H[e] for each element e of the domain.
using Bijection = std::vector<Element>;

bool is_isomorphism(const Bijection& h, const FiniteStructure& a, const FiniteStructure& b);
// All isomorphisms A -> B in lexicographic order of the image vectors.
// Throws SignatureError if the signatures differ.
std::vector<Bijection> find_isomorphisms(const FiniteStructure& a, const FiniteStructure& b);
// A |= f(sigma) iff B |= f(H o sigma), over every assignment of f's free variables.
bool respects(const Bijection& h, const FiniteStructure& a, const FiniteStructure& b,
              const Formula& f);
// Image of A under the bijection h: same signature, elements renamed to
// the names in target_names (target_names[h[e]] names the image of e).
FiniteStructure transport(const FiniteStructure& a, const Bijection& h,
                          std::vector<std::string> target_names, std::string name);

// Structure DSL.
//
//   structure NAME [graph] {
//     universe: a b c
//     function f/1 { (a) -> b, (b) -> b, (c) -> b }
//     relation E/2 { (a,b), (b,c) }
//     constant e = a
//   }
//
// "graph NAME { ... }" is shorthand for "structure NAME graph { ... }". In a
// graph block every binary relation is symmetrized, and a block without
// relations gets an empty E/2. '#' starts a comment.
std::vector<FiniteStructure> parse_structures(std::string_view text);
// Throws std::ios_base::failure when the file cannot be read.
std::vector<FiniteStructure> load_structures(const std::string& path);

}  // namespace anaprop
