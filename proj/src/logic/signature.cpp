#include "anaprop/signature.hpp"

#include <algorithm>

namespace anaprop {

namespace {

std::optional<std::size_t> find_symbol(const std::vector<Symbol>& symbols,
                                       std::string_view name) {
  auto it = std::find_if(symbols.begin(), symbols.end(),
                         [&](const Symbol& s) { return s.name == name; });
  if (it == symbols.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols.begin());
}

}  // namespace

void Signature::check_fresh(const std::string& name) const {
  if (name.empty()) throw SignatureError("empty symbol name");
  if (kind_of(name))
    throw SignatureError("symbol '" + name + "' declared twice");
}

Signature& Signature::add_relation(std::string name, int arity) {
  check_fresh(name);
  if (arity < 1)
    throw SignatureError("relation '" + name + "' needs a positive arity");
  relations_.push_back({std::move(name), arity, false});
  return *this;
}

Signature& Signature::add_function(std::string name, int arity) {
  check_fresh(name);
  if (arity < 1)
    throw SignatureError("function '" + name + "' needs a positive arity");
  functions_.push_back({std::move(name), arity, false});
  return *this;
}

Signature& Signature::add_constant(std::string name, bool parameter) {
  check_fresh(name);
  constants_.push_back({std::move(name), 0, parameter});
  return *this;
}

std::optional<SymbolKind> Signature::kind_of(std::string_view name) const {
  if (find_symbol(relations_, name)) return SymbolKind::Relation;
  if (find_symbol(functions_, name)) return SymbolKind::Function;
  if (find_symbol(constants_, name)) return SymbolKind::Constant;
  return std::nullopt;
}

std::optional<std::size_t> Signature::relation_index(std::string_view name) const {
  return find_symbol(relations_, name);
}

std::optional<std::size_t> Signature::function_index(std::string_view name) const {
  return find_symbol(functions_, name);
}

std::optional<std::size_t> Signature::constant_index(std::string_view name) const {
  return find_symbol(constants_, name);
}

Signature Signature::without_parameters() const {
  Signature out;
  out.relations_ = relations_;
  out.functions_ = functions_;
  for (const auto& c : constants_)
    if (!c.parameter) out.constants_.push_back(c);
  return out;
}

bool Signature::compatible_with(const Signature& other) const {
  return without_parameters() == other.without_parameters();
}

}  // namespace anaprop
