#include "anaprop/index.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace anaprop {

namespace {

std::vector<Extension> path_extensions(const FiniteStructure& s, int max_n) {
  const auto n = s.size();
  Extension reach(n);
  for (Element a = 0; a < n; ++a) reach.insert(a, a);
  std::vector<Extension> out{reach};
  for (int k = 1; k <= max_n; ++k) {
    Extension next(n);
    for (Element a = 0; a < n; ++a)
      for (Element m = 0; m < n; ++m) {
        if (!reach.contains(a, m)) continue;
        for (Element b = 0; b < n; ++b) {
          Element t[2] = {m, b};
          if (s.holds(0, t)) next.insert(a, b);
        }
      }
    reach = std::move(next);
    out.push_back(reach);
  }
  return out;
}

std::vector<boost::dynamic_bitset<>::block_type> key_of(const Extension& x, const Extension& y) {
  std::vector<boost::dynamic_bitset<>::block_type> key;
  boost::to_block_range(x.bits(), std::back_inserter(key));
  boost::to_block_range(y.bits(), std::back_inserter(key));
  return key;
}

std::vector<boost::dynamic_bitset<>> type_table(const std::vector<Extension>& ext, std::size_t n) {
  std::vector<boost::dynamic_bitset<>> out(n * n, boost::dynamic_bitset<>(ext.size()));
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t p = 0; p < n * n; ++p)
      if (ext[i].bits().test(p)) out[p].set(i);
  return out;
}

}  // namespace

const boost::dynamic_bitset<>& JustificationIndex::type_bits(Side s, Element a, Element b) const {
  const std::size_t n = universe_size(s);
  if (a >= n) throw UnknownElementError("#" + std::to_string(a));
  if (b >= n) throw UnknownElementError("#" + std::to_string(b));
  return (s == Side::A ? types_a : types_b)[a * n + b];
}

JustificationIndex build_index(const FiniteStructure& a, const FiniteStructure& b,
                               const FragmentSpec& frag, const IndexOptions& opts) {
  if (!a.signature().compatible_with(b.signature()))
    throw SignatureError("structures '" + a.name() + "' and '" + b.name() +
                         "' have different signatures");
  JustificationIndex idx;
  idx.fragment = frag;
  idx.size_a = a.size();
  idx.size_b = b.size();

  std::vector<Formula> formulas;
  std::vector<Extension> ea, eb;
  if (frag.kind == FragmentSpec::Kind::Path) {
    const Signature& sig = a.signature();
    if (sig.relations().size() != 1 || sig.relations()[0].arity != 2 || !sig.functions().empty())
      throw SignatureError("path formulas need a signature with one binary relation");
    int max_n = frag.max_path_length > 0
                    ? frag.max_path_length
                    : static_cast<int>(2 * std::max(a.size(), b.size()) + 1);
    ea = path_extensions(a, max_n);
    eb = path_extensions(b, max_n);
    for (int k = 0; k <= max_n; ++k) formulas.push_back(path_formula(k, sig.relations()[0].name));
  } else {
    CandidateSet set = enumerate_candidates(a.signature().without_parameters(), frag, opts.dependency);
    TableEvaluator ta(a, set), tb(b, set);
    for (const auto& c : set.candidates()) {
      formulas.push_back(set.formula(c));
      ea.push_back(ta.extension(c));
      eb.push_back(tb.extension(c));
    }
  }
  idx.enumerated = formulas.size();

  std::set<std::vector<boost::dynamic_bitset<>::block_type>> seen;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (opts.semantic_collapse && !seen.insert(key_of(ea[i], eb[i])).second) continue;
    idx.formulas.push_back(std::move(formulas[i]));
    idx.ext_a.push_back(std::move(ea[i]));
    idx.ext_b.push_back(std::move(eb[i]));
  }
  for (const auto& f : opts.extras) {
    idx.formulas.push_back(f);
    idx.ext_a.push_back(extension(a, f));
    idx.ext_b.push_back(extension(b, f));
  }

  idx.trivial.resize(idx.formulas.size());
  for (std::size_t i = 0; i < idx.formulas.size(); ++i)
    idx.trivial[i] = idx.ext_a[i].full() && idx.ext_b[i].full();
  idx.types_a = type_table(idx.ext_a, idx.size_a);
  idx.types_b = type_table(idx.ext_b, idx.size_b);
  return idx;
}

std::vector<std::size_t> justification_type(const JustificationIndex& idx, Side side, Element a,
                                            Element b) {
  const auto& bits = idx.type_bits(side, a, b);
  std::vector<std::size_t> out;
  for (auto i = bits.find_first(); i != bits.npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace anaprop
