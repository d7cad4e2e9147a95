#include <algorithm>
#include <numeric>

#include "anaprop/harness.hpp"

namespace anaprop::harness {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::string> element_names(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

FiniteStructure bare_set(std::size_t n) {
  return FiniteStructure("set" + std::to_string(n), Signature{}, element_names(n));
}

FiniteStructure random_unary_structure(std::mt19937_64& rng, std::size_t n, int functions,
                                       const std::string& name) {
  Signature sig;
  for (int i = 0; i < functions; ++i) sig.add_function("f" + std::to_string(i), 1);
  FiniteStructure s(name, sig, element_names(n));
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int i = 0; i < functions; ++i)
    for (Element e = 0; e < n; ++e) s.set_function("f" + std::to_string(i), {e}, pick(rng));
  return s;
}

FiniteStructure random_binary_algebra(std::mt19937_64& rng, std::size_t n,
                                      const std::string& name) {
  Signature sig;
  sig.add_function("o", 2);
  FiniteStructure s(name, sig, element_names(n));
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) s.set_function("o", {u, v}, pick(rng));
  return s;
}

UndirectedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, bool loops) {
  UndirectedGraph g(element_names(n, "v"));
  std::bernoulli_distribution coin(density);
  for (Element u = 0; u < n; ++u)
    for (Element v = loops ? u : u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Bijection random_permutation(std::mt19937_64& rng, std::size_t n) {
  Bijection h(n);
  std::iota(h.begin(), h.end(), Element{0});
  std::shuffle(h.begin(), h.end(), rng);
  return h;
}

}  // namespace anaprop::harness
