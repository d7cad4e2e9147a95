#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anaprop {

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind { Relation, Function, Constant };

struct Symbol {
  std::string name;
  int arity = 0;
  // Parameter constants name individual elements. They are created by the
  // equational machinery for single-structure checks and never enumerated.
  bool parameter = false;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Relation, function and constant symbols with pairwise disjoint names.
class Signature {
 public:
  Signature& add_relation(std::string name, int arity);
  Signature& add_function(std::string name, int arity);
  Signature& add_constant(std::string name, bool parameter = false);

  const std::vector<Symbol>& relations() const { return relations_; }
  const std::vector<Symbol>& functions() const { return functions_; }
  const std::vector<Symbol>& constants() const { return constants_; }

  std::optional<SymbolKind> kind_of(std::string_view name) const;
  std::optional<std::size_t> relation_index(std::string_view name) const;
  std::optional<std::size_t> function_index(std::string_view name) const;
  std::optional<std::size_t> constant_index(std::string_view name) const;

  // Same symbols, ignoring parameter constants.
  bool compatible_with(const Signature& other) const;
  // Copy without parameter constants.
  Signature without_parameters() const;

  bool empty() const {
    return relations_.empty() && functions_.empty() && constants_.empty();
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  void check_fresh(const std::string& name) const;

  std::vector<Symbol> relations_;
  std::vector<Symbol> functions_;
  std::vector<Symbol> constants_;
};

}  // namespace anaprop
