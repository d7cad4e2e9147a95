#include "anaprop/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace anaprop {

std::string quantifier_kinds(const Bounds& b) {
  if (b.allow_exists && b.allow_forall) return "exists,forall";
  if (b.allow_exists) return "exists";
  if (b.allow_forall) return "forall";
  return "";
}

std::string to_string(const Bounds& b) {
  return "atoms=" + std::to_string(b.max_atoms) + " depth=" + std::to_string(b.max_term_depth) +
         " quantifiers=" + std::to_string(b.max_quantifiers) + " kinds=" +
         (quantifier_kinds(b).empty() ? "none" : quantifier_kinds(b)) +
         " constants=" + (b.allow_constants ? "on" : "off");
}

std::string to_string(FragmentSpec::Kind k) {
  switch (k) {
    case FragmentSpec::Kind::CFormula: return "cformula";
    case FragmentSpec::Kind::Equational: return "equational";
    case FragmentSpec::Kind::Path: return "path";
  }
  return "?";
}

Formula path_formula(int n, const std::string& relation) {
  if (n < 0) throw std::invalid_argument("negative path length");
  auto edge = [&](const std::string& u, const std::string& v) {
    return Formula::relation(relation, {Term::variable(u), Term::variable(v)});
  };
  if (n == 0) return Formula::equals(Term::variable(kVarX), Term::variable(kVarY));
  if (n == 1) return edge(kVarX, kVarY);
  std::vector<Formula> atoms;
  atoms.push_back(edge(kVarX, bound_variable(1)));
  for (int i = 1; i + 1 < n; ++i) atoms.push_back(edge(bound_variable(i), bound_variable(i + 1)));
  atoms.push_back(edge(bound_variable(n - 1), kVarY));
  Formula f = Formula::conjunction_of(std::move(atoms));
  for (int i = n - 1; i >= 1; --i) f = Formula::exists(bound_variable(i), std::move(f));
  return f;
}

namespace {

std::string leaf_key(const Term& t) {
  if (t.kind != Term::Kind::Application) return t.symbol;
  std::string out;
  for (const auto& a : t.args) {
    if (!out.empty()) out += ",";
    out += leaf_key(a);
  }
  return out;
}

// Equalities are unordered; orient by the leaves first so that x = f(y) and
// f(x) = y keep x on the left.
Formula make_equality(const Term& s, const Term& t) {
  auto ks = std::make_pair(leaf_key(s), to_string(s));
  auto kt = std::make_pair(leaf_key(t), to_string(t));
  return ks <= kt ? Formula::equals(s, t) : Formula::equals(t, s);
}

Term rename(const Term& t, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  if (t.kind == Term::Kind::Variable) {
    for (std::size_t i = 0; i < from.size(); ++i)
      if (t.symbol == from[i]) return Term::variable(to[i]);
    return t;
  }
  Term out = t;
  for (auto& a : out.args) a = rename(a, from, to);
  return out;
}

Formula rename_atom(const Formula& atom, const std::vector<std::string>& from,
                    const std::vector<std::string>& to) {
  if (atom.kind == Formula::Kind::Equality)
    return make_equality(rename(atom.terms[0], from, to), rename(atom.terms[1], from, to));
  Formula out = atom;
  for (auto& t : out.terms) t = rename(t, from, to);
  return out;
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

std::vector<std::string> variable_pool(int m) {
  std::vector<std::string> vars{kVarX, kVarY};
  for (int i = 1; i <= m; ++i) vars.push_back(bound_variable(i));
  return vars;
}

std::vector<Term> generate_terms(const Signature& sig, int m, const Bounds& b) {
  std::vector<Term> all;
  for (const auto& v : variable_pool(m)) all.push_back(Term::variable(v));
  if (b.allow_constants)
    for (const auto& c : sig.constants())
      if (!c.parameter) all.push_back(Term::constant(c.name));
  std::size_t prev_begin = 0;
  for (int d = 1; d <= b.max_term_depth; ++d) {
    std::size_t prev_end = all.size();
    for (const auto& f : sig.functions()) {
      std::vector<std::size_t> idx(f.arity, 0);
      do {
        if (*std::max_element(idx.begin(), idx.end()) < prev_begin) continue;
        std::vector<Term> args;
        for (auto i : idx) args.push_back(all[i]);
        all.push_back(Term::apply(f.name, std::move(args)));
      } while (next_tuple(idx, prev_end));
    }
    prev_begin = prev_end;
    if (all.size() == prev_end) break;
  }
  return all;
}

std::uint32_t variable_mask(const Formula& atom, const std::vector<std::string>& pool) {
  std::uint32_t mask = 0;
  for (const auto& t : atom.terms)
    for (const auto& v : variables(t)) {
      auto it = std::find(pool.begin(), pool.end(), v);
      mask |= 1u << (it - pool.begin());
    }
  return mask;
}

bool connected(const std::vector<std::uint32_t>& masks, std::uint32_t full) {
  std::uint32_t comp = 0;
  for (auto m : masks)
    if (m) {
      comp = m;
      break;
    }
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto m : masks)
      if ((m & comp) && (m & ~comp)) {
        comp |= m;
        grew = true;
      }
  }
  return comp == full;
}

struct AtomLayer {
  std::vector<Formula> atoms;
  std::vector<std::uint32_t> masks;
  std::vector<std::vector<int>> perms;               // perms[p][i]: z(i+1) -> z(perms[p][i]+1)
  std::vector<std::vector<std::uint32_t>> perm_map;  // atom id under each permutation
};

AtomLayer build_layer(const Signature& sig, int m, const FragmentSpec& frag) {
  AtomLayer layer;
  auto pool = variable_pool(m);
  auto terms = generate_terms(sig, m, frag.bounds);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      layer.atoms.push_back(make_equality(terms[i], terms[j]));
  if (frag.kind == FragmentSpec::Kind::CFormula)
    for (const auto& r : sig.relations()) {
      std::vector<std::size_t> idx(r.arity, 0);
      do {
        std::vector<Term> args;
        for (auto i : idx) args.push_back(terms[i]);
        layer.atoms.push_back(Formula::relation(r.name, std::move(args)));
      } while (next_tuple(idx, terms.size()));
    }
  std::unordered_map<std::string, std::uint32_t> ids;
  for (std::uint32_t i = 0; i < layer.atoms.size(); ++i) {
    ids.emplace(to_string(layer.atoms[i]), i);
    layer.masks.push_back(variable_mask(layer.atoms[i], pool));
  }
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::string> from(pool.begin() + 2, pool.end());
  do {
    std::vector<std::string> to;
    for (int i = 0; i < m; ++i) to.push_back(bound_variable(p[i] + 1));
    std::vector<std::uint32_t> map;
    map.reserve(layer.atoms.size());
    for (const auto& a : layer.atoms) map.push_back(ids.at(to_string(rename_atom(a, from, to))));
    layer.perms.push_back(p);
    layer.perm_map.push_back(std::move(map));
  } while (std::next_permutation(p.begin(), p.end()));
  return layer;
}

std::vector<std::uint32_t> prefix_masks(int m, const Bounds& b) {
  std::uint32_t all = (1u << m) - 1;
  if (m == 0) return {0};
  if (b.allow_exists && b.allow_forall) {
    std::vector<std::uint32_t> out(all + 1);
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }
  if (b.allow_exists) return {0};
  if (b.allow_forall) return {all};
  return {};
}

// Permutations (by index into layer.perms) that keep every variable inside
// its block of equal adjacent quantifiers, identity excluded.
std::vector<std::size_t> block_perms(const AtomLayer& layer, int m, std::uint32_t mask) {
  std::vector<int> block(m, 0);
  for (int i = 1; i < m; ++i)
    block[i] = block[i - 1] + (((mask >> i) & 1) != ((mask >> (i - 1)) & 1));
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p < layer.perms.size(); ++p) {
    const auto& perm = layer.perms[p];
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = block[i] == block[perm[i]];
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace

Formula CandidateSet::formula(const Candidate& c) const {
  std::vector<Formula> conj;
  for (auto a : c.atoms) conj.push_back(atoms_.at(c.quantifiers).at(a));
  Formula f = Formula::conjunction_of(std::move(conj));
  for (int i = c.quantifiers; i >= 1; --i) {
    bool forall = (c.forall_mask >> (i - 1)) & 1;
    f = forall ? Formula::forall(bound_variable(i), std::move(f))
               : Formula::exists(bound_variable(i), std::move(f));
  }
  return f;
}

CandidateSet enumerate_candidates(const Signature& sig, const FragmentSpec& frag,
                                  const DependencyOptions& dep) {
  if (frag.kind == FragmentSpec::Kind::Path)
    throw std::invalid_argument("path formulas are not enumerated as candidates");
  const Bounds& b = frag.bounds;
  if (b.max_atoms < 0 || b.max_term_depth < 0 || b.max_quantifiers < 0)
    throw std::invalid_argument("negative bounds");
  if (b.max_quantifiers > 5) throw std::invalid_argument("at most 5 quantifiers are supported");
  bool equational = frag.kind == FragmentSpec::Kind::Equational;
  int max_m = equational ? 0 : b.max_quantifiers;
  if (!b.allow_exists && !b.allow_forall) max_m = 0;
  int max_k = equational ? std::min(1, b.max_atoms) : b.max_atoms;

  CandidateSet out;
  out.sig_ = sig;
  for (int m = 0; m <= max_m; ++m) {
    AtomLayer layer = build_layer(sig, m, frag);
    const std::uint32_t full = (1u << (2 + m)) - 1;
    auto masks = prefix_masks(m, b);
    std::vector<std::vector<std::size_t>> perms_for;
    for (auto pm : masks) perms_for.push_back(block_perms(layer, m, pm));
    const std::size_t n = layer.atoms.size();

    for (int k = 1; k <= max_k && static_cast<std::size_t>(k) <= n; ++k) {
      std::vector<std::uint32_t> combo(k);
      std::iota(combo.begin(), combo.end(), 0u);
      std::vector<std::uint32_t> cmasks(k), image(k);
      while (true) {
        for (int i = 0; i < k; ++i) cmasks[i] = layer.masks[combo[i]];
        if (connected(cmasks, full)) {
          for (std::size_t q = 0; q < masks.size(); ++q) {
            bool canonical = true;
            for (auto p : perms_for[q]) {
              for (int i = 0; i < k; ++i) image[i] = layer.perm_map[p][combo[i]];
              std::sort(image.begin(), image.end());
              if (image < combo) {
                canonical = false;
                break;
              }
            }
            if (canonical) out.candidates_.push_back({m, masks[q], combo});
          }
        }
        int i = k - 1;
        while (i >= 0 && combo[i] == n - k + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      }
    }
    out.atoms_.push_back(std::move(layer.atoms));
  }
  if (dep.constants_as_vertices) {
    auto& cs = out.candidates_;
    cs.erase(std::remove_if(cs.begin(), cs.end(),
                            [&](const Candidate& c) {
                              return !is_connected_formula(out.formula(c), dep);
                            }),
             cs.end());
  }
  return out;
}

std::vector<Formula> enumerate_cformulas(const Signature& sig, const Bounds& b) {
  auto set = enumerate_candidates(sig, FragmentSpec::cformula(b));
  std::vector<Formula> out;
  out.reserve(set.size());
  for (const auto& c : set.candidates()) out.push_back(set.formula(c));
  return out;
}

// ---------------------------------------------------------------------------
// Table evaluation

namespace {

using Table = std::vector<Element>;

class TermTables {
 public:
  TermTables(const FiniteStructure& s, int m) : s_(s), m_(m) {
    n_ = s.size();
    size_ = 1;
    for (int i = 0; i < 2 + m; ++i) size_ *= n_;
  }

  const Table& get(const Term& t) {
    std::string key = to_string(t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Table tab(size_);
    switch (t.kind) {
      case Term::Kind::Variable: {
        auto pool = variable_pool(m_);
        std::size_t pos = std::find(pool.begin(), pool.end(), t.symbol) - pool.begin();
        std::size_t stride = 1;
        for (std::size_t i = pos + 1; i < pool.size(); ++i) stride *= n_;
        for (std::size_t i = 0; i < size_; ++i) tab[i] = static_cast<Element>((i / stride) % n_);
        break;
      }
      case Term::Kind::Constant: {
        auto c = s_.signature().constant_index(t.symbol);
        std::fill(tab.begin(), tab.end(), s_.constant(*c));
        break;
      }
      case Term::Kind::Application: {
        auto f = *s_.signature().function_index(t.symbol);
        std::vector<const Table*> args;
        for (const auto& a : t.args) args.push_back(&get(a));
        std::vector<Element> tuple(args.size());
        for (std::size_t i = 0; i < size_; ++i) {
          for (std::size_t j = 0; j < args.size(); ++j) tuple[j] = (*args[j])[i];
          tab[i] = s_.apply(f, tuple);
        }
        break;
      }
    }
    return memo_.emplace(std::move(key), std::move(tab)).first->second;
  }

  std::size_t size() const { return size_; }

 private:
  const FiniteStructure& s_;
  int m_;
  std::size_t n_ = 0, size_ = 0;
  std::unordered_map<std::string, Table> memo_;
};

}  // namespace

TableEvaluator::TableEvaluator(const FiniteStructure& s, const CandidateSet& set) : n_(s.size()) {
  for (int m = 0; m <= set.max_quantifiers(); ++m) {
    TermTables terms(s, m);
    std::vector<boost::dynamic_bitset<>> tables;
    for (const auto& atom : set.atoms(m)) {
      boost::dynamic_bitset<> bits(terms.size());
      if (atom.kind == Formula::Kind::Equality) {
        const Table& l = terms.get(atom.terms[0]);
        const Table& r = terms.get(atom.terms[1]);
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = l[i] == r[i];
      } else {
        auto rel = *s.signature().relation_index(atom.symbol);
        std::vector<const Table*> args;
        for (const auto& t : atom.terms) args.push_back(&terms.get(t));
        std::vector<Element> tuple(args.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
          for (std::size_t j = 0; j < args.size(); ++j) tuple[j] = (*args[j])[i];
          bits[i] = s.holds(rel, tuple);
        }
      }
      tables.push_back(std::move(bits));
    }
    atom_tables_.push_back(std::move(tables));
  }
}

Extension TableEvaluator::extension(const Candidate& c) const {
  const auto& tables = atom_tables_.at(c.quantifiers);
  boost::dynamic_bitset<> acc = tables.at(c.atoms.front());
  for (std::size_t i = 1; i < c.atoms.size(); ++i) acc &= tables[c.atoms[i]];
  // Project bound variables away, innermost (least significant) first.
  for (int q = c.quantifiers; q >= 1; --q) {
    bool forall = (c.forall_mask >> (q - 1)) & 1;
    boost::dynamic_bitset<> out(acc.size() / n_);
    for (std::size_t g = 0; g < out.size(); ++g) {
      bool v = forall;
      for (std::size_t j = 0; j < n_; ++j) {
        if (acc[g * n_ + j] != forall) {
          v = !forall;
          break;
        }
      }
      out[g] = v;
    }
    acc = std::move(out);
  }
  return Extension(n_, std::move(acc));
}

}  // namespace anaprop
