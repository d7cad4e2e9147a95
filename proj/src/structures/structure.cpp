#include "anaprop/structure.hpp"

#include <algorithm>
#include <numeric>

namespace anaprop {

namespace {

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Advances a tuple over {0..n-1}^k in row-major order; false after the last.
bool next_tuple(std::vector<Element>& t, std::size_t n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

FiniteStructure::FiniteStructure(std::string name, Signature sig,
                                 std::vector<std::string> universe)
    : name_(std::move(name)), sig_(std::move(sig)), names_(std::move(universe)) {
  if (names_.empty()) throw StructureError("structure '" + name_ + "' has an empty universe");
  for (Element e = 0; e < names_.size(); ++e)
    if (!ids_.emplace(names_[e], e).second)
      throw StructureError("element '" + names_[e] + "' listed twice in '" + name_ + "'");
  for (const auto& f : sig_.functions())
    functions_.emplace_back(power(size(), f.arity), kUnset);
  for (const auto& r : sig_.relations()) relations_.emplace_back(power(size(), r.arity));
  constants_.resize(sig_.constants().size());
}

std::optional<Element> FiniteStructure::find_element(std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Element FiniteStructure::element(std::string_view name) const {
  auto e = find_element(name);
  if (!e) throw UnknownElementError(std::string(name));
  return *e;
}

std::size_t FiniteStructure::offset(const Element* args, int arity) const {
  std::size_t off = 0;
  for (int i = 0; i < arity; ++i) off = off * size() + args[i];
  return off;
}

void FiniteStructure::set_function(std::string_view f, const std::vector<Element>& args,
                                   Element value) {
  auto i = sig_.function_index(f);
  if (!i) throw SignatureError("unknown function symbol '" + std::string(f) + "'");
  if (static_cast<int>(args.size()) != sig_.functions()[*i].arity)
    throw StructureError("arity mismatch in table of '" + std::string(f) + "'");
  for (Element a : args)
    if (a >= size()) throw StructureError("argument outside the universe");
  if (value >= size()) throw StructureError("function value outside the universe");
  functions_[*i][offset(args.data(), static_cast<int>(args.size()))] = value;
}

void FiniteStructure::add_tuple(std::string_view r, const std::vector<Element>& tuple) {
  auto i = sig_.relation_index(r);
  if (!i) throw SignatureError("unknown relation symbol '" + std::string(r) + "'");
  if (static_cast<int>(tuple.size()) != sig_.relations()[*i].arity)
    throw StructureError("arity mismatch in relation '" + std::string(r) + "'");
  for (Element a : tuple)
    if (a >= size()) throw StructureError("tuple component outside the universe");
  relations_[*i].set(offset(tuple.data(), static_cast<int>(tuple.size())));
}

void FiniteStructure::set_constant(std::string_view c, Element value) {
  auto i = sig_.constant_index(c);
  if (!i) throw SignatureError("unknown constant symbol '" + std::string(c) + "'");
  if (value >= size()) throw StructureError("constant value outside the universe");
  constants_[*i] = value;
}

void FiniteStructure::validate() const {
  for (std::size_t i = 0; i < functions_.size(); ++i)
    if (std::find(functions_[i].begin(), functions_[i].end(), kUnset) != functions_[i].end())
      throw StructureError("function '" + sig_.functions()[i].name + "' is not total in '" +
                           name_ + "'");
  for (std::size_t i = 0; i < constants_.size(); ++i)
    if (!constants_[i])
      throw StructureError("constant '" + sig_.constants()[i].name +
                           "' is not interpreted in '" + name_ + "'");
}

Element FiniteStructure::apply(std::size_t f, const Element* args) const {
  return functions_[f][offset(args, sig_.functions()[f].arity)];
}

bool FiniteStructure::holds(std::size_t r, const Element* tuple) const {
  return relations_[r].test(offset(tuple, sig_.relations()[r].arity));
}

Element FiniteStructure::constant(std::size_t c) const {
  if (!constants_[c])
    throw EvaluationError("constant '" + sig_.constants()[c].name + "' is not interpreted");
  return *constants_[c];
}

FiniteStructure FiniteStructure::with_parameter(const std::string& constant, Element e) const {
  FiniteStructure out = *this;
  out.sig_.add_constant(constant, true);
  out.constants_.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Satisfaction

Element evaluate_term(const FiniteStructure& s, const Term& t, const Assignment& sigma) {
  switch (t.kind) {
    case Term::Kind::Variable: {
      auto it = sigma.find(t.symbol);
      if (it == sigma.end()) throw EvaluationError("unassigned variable '" + t.symbol + "'");
      return it->second;
    }
    case Term::Kind::Constant: {
      auto c = s.signature().constant_index(t.symbol);
      if (!c) throw EvaluationError("unknown constant '" + t.symbol + "'");
      return s.constant(*c);
    }
    case Term::Kind::Application: {
      auto f = s.signature().function_index(t.symbol);
      if (!f) throw EvaluationError("unknown function '" + t.symbol + "'");
      std::vector<Element> args;
      args.reserve(t.args.size());
      for (const auto& a : t.args) args.push_back(evaluate_term(s, a, sigma));
      if (static_cast<int>(args.size()) != s.signature().functions()[*f].arity)
        throw EvaluationError("arity mismatch for '" + t.symbol + "'");
      return s.apply(*f, args);
    }
  }
  return 0;
}

bool satisfies(const FiniteStructure& s, const Formula& f, const Assignment& sigma) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Equality:
      return evaluate_term(s, f.terms[0], sigma) == evaluate_term(s, f.terms[1], sigma);
    case K::Relation: {
      auto r = s.signature().relation_index(f.symbol);
      if (!r) throw EvaluationError("unknown relation '" + f.symbol + "'");
      std::vector<Element> args;
      for (const auto& t : f.terms) args.push_back(evaluate_term(s, t, sigma));
      if (static_cast<int>(args.size()) != s.signature().relations()[*r].arity)
        throw EvaluationError("arity mismatch for '" + f.symbol + "'");
      return s.holds(*r, args);
    }
    case K::And:
      return satisfies(s, f.children[0], sigma) && satisfies(s, f.children[1], sigma);
    case K::Or:
      return satisfies(s, f.children[0], sigma) || satisfies(s, f.children[1], sigma);
    case K::Not:
      return !satisfies(s, f.children[0], sigma);
    case K::Exists:
    case K::Forall: {
      Assignment inner = sigma;
      bool want = f.kind == K::Exists;
      for (Element e = 0; e < s.size(); ++e) {
        inner[f.symbol] = e;
        if (satisfies(s, f.children[0], inner) == want) return want;
      }
      return !want;
    }
  }
  return false;
}

Extension extension(const FiniteStructure& s, const Formula& f) {
  if (!is_two_formula(f)) throw std::invalid_argument("extension needs a formula of rank 2 in x, y");
  Extension out(s.size());
  Assignment sigma;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      sigma[kVarX] = a;
      sigma[kVarY] = b;
      if (satisfies(s, f, sigma)) out.insert(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphisms

bool is_isomorphism(const Bijection& h, const FiniteStructure& a, const FiniteStructure& b) {
  const auto n = a.size();
  if (b.size() != n || h.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element e : h) {
    if (e >= n || hit[e]) return false;
    hit[e] = true;
  }
  const Signature& sig = a.signature();
  std::vector<Element> img;
  for (std::size_t f = 0; f < sig.functions().size(); ++f) {
    std::vector<Element> args(sig.functions()[f].arity, 0);
    do {
      img.resize(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) img[i] = h[args[i]];
      if (h[a.apply(f, args)] != b.apply(f, img)) return false;
    } while (next_tuple(args, n));
  }
  for (std::size_t r = 0; r < sig.relations().size(); ++r) {
    std::vector<Element> args(sig.relations()[r].arity, 0);
    do {
      img.resize(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) img[i] = h[args[i]];
      if (a.holds(r, args) != b.holds(r, img)) return false;
    } while (next_tuple(args, n));
  }
  for (std::size_t c = 0; c < sig.constants().size(); ++c)
    if (h[a.constant(c)] != b.constant(c)) return false;
  return true;
}

namespace {

// Isomorphism-invariant profile of one element, used to prune candidates.
std::vector<std::size_t> profile(const FiniteStructure& s, Element e) {
  const Signature& sig = s.signature();
  const auto n = s.size();
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < sig.functions().size(); ++f) {
    std::vector<Element> args(sig.functions()[f].arity, 0);
    std::size_t preimages = 0;
    do {
      if (s.apply(f, args) == e) ++preimages;
    } while (next_tuple(args, n));
    std::vector<Element> diag(sig.functions()[f].arity, e);
    out.push_back(preimages);
    out.push_back(s.apply(f, diag) == e);
  }
  for (std::size_t r = 0; r < sig.relations().size(); ++r) {
    int arity = sig.relations()[r].arity;
    std::vector<std::size_t> at(arity, 0);
    std::vector<Element> args(arity, 0);
    do {
      if (!s.holds(r, args)) continue;
      for (int i = 0; i < arity; ++i)
        if (args[i] == e) ++at[i];
    } while (next_tuple(args, n));
    out.insert(out.end(), at.begin(), at.end());
    std::vector<Element> diag(arity, e);
    out.push_back(s.holds(r, diag));
  }
  for (std::size_t c = 0; c < sig.constants().size(); ++c) out.push_back(s.constant(c) == e);
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteStructure& a, const FiniteStructure& b) : a_(a), b_(b), n_(a.size()) {
    for (Element e = 0; e < n_; ++e) {
      pa_.push_back(profile(a, e));
      pb_.push_back(profile(b, e));
    }
    h_.assign(n_, kUnset);
    used_.assign(n_, false);
  }

  std::vector<Bijection> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  // Checks every function and relation instance whose arguments are all
  // among the already mapped elements 0..i and mention i.
  bool consistent(Element i) const {
    const Signature& sig = a_.signature();
    std::vector<Element> img;
    for (std::size_t f = 0; f < sig.functions().size(); ++f) {
      std::vector<Element> args(sig.functions()[f].arity, 0);
      do {
        if (std::find(args.begin(), args.end(), i) == args.end()) continue;
        if (std::any_of(args.begin(), args.end(), [&](Element x) { return x > i; })) continue;
        Element v = a_.apply(f, args);
        img.resize(args.size());
        for (std::size_t k = 0; k < args.size(); ++k) img[k] = h_[args[k]];
        Element w = b_.apply(f, img);
        if (v <= i) {
          if (h_[v] != w) return false;
        } else if (used_[w]) {
          return false;
        }
      } while (next_tuple(args, n_));
    }
    for (std::size_t r = 0; r < sig.relations().size(); ++r) {
      std::vector<Element> args(sig.relations()[r].arity, 0);
      do {
        if (std::find(args.begin(), args.end(), i) == args.end()) continue;
        if (std::any_of(args.begin(), args.end(), [&](Element x) { return x > i; })) continue;
        img.resize(args.size());
        for (std::size_t k = 0; k < args.size(); ++k) img[k] = h_[args[k]];
        if (a_.holds(r, args) != b_.holds(r, img)) return false;
      } while (next_tuple(args, n_));
    }
    return true;
  }

  void extend(Element i) {
    if (i == n_) {
      if (is_isomorphism(h_, a_, b_)) found_.push_back(h_);
      return;
    }
    for (Element j = 0; j < n_; ++j) {
      if (used_[j] || pa_[i] != pb_[j]) continue;
      h_[i] = j;
      used_[j] = true;
      if (consistent(i)) extend(i + 1);
      used_[j] = false;
      h_[i] = kUnset;
    }
  }

  const FiniteStructure& a_;
  const FiniteStructure& b_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> pa_, pb_;
  Bijection h_;
  std::vector<bool> used_;
  std::vector<Bijection> found_;
};

}  // namespace

std::vector<Bijection> find_isomorphisms(const FiniteStructure& a, const FiniteStructure& b) {
  if (!(a.signature() == b.signature()))
    throw SignatureError("isomorphism search needs structures over the same signature");
  if (a.size() != b.size()) return {};
  return IsoSearch(a, b).run();
}

bool respects(const Bijection& h, const FiniteStructure& a, const FiniteStructure& b,
              const Formula& f) {
  const auto free = free_variables(f);
  std::vector<std::string> vars(free.begin(), free.end());
  std::vector<Element> tuple(vars.size(), 0);
  Assignment sa, sb;
  do {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      sa[vars[i]] = tuple[i];
      sb[vars[i]] = h[tuple[i]];
    }
    if (satisfies(a, f, sa) != satisfies(b, f, sb)) return false;
  } while (next_tuple(tuple, a.size()));
  return true;
}

FiniteStructure transport(const FiniteStructure& a, const Bijection& h,
                          std::vector<std::string> target_names, std::string name) {
  FiniteStructure out(std::move(name), a.signature(), std::move(target_names));
  const Signature& sig = a.signature();
  const auto n = a.size();
  auto image = [&](const std::vector<Element>& args) {
    std::vector<Element> img(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) img[i] = h[args[i]];
    return img;
  };
  for (const auto& f : sig.functions()) {
    auto fi = *sig.function_index(f.name);
    std::vector<Element> args(f.arity, 0);
    do {
      out.set_function(f.name, image(args), h[a.apply(fi, args)]);
    } while (next_tuple(args, n));
  }
  for (const auto& r : sig.relations()) {
    auto ri = *sig.relation_index(r.name);
    std::vector<Element> args(r.arity, 0);
    do {
      if (a.holds(ri, args)) out.add_tuple(r.name, image(args));
    } while (next_tuple(args, n));
  }
  for (std::size_t c = 0; c < sig.constants().size(); ++c)
    out.set_constant(sig.constants()[c].name, h[a.constant(c)]);
  return out;
}

}  // namespace anaprop
