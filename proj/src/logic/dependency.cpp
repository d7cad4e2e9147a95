#include "anaprop/dependency.hpp"

#include <map>
#include <stdexcept>

namespace anaprop {

namespace {

void add_atoms(const Formula& f, const DependencyOptions& opts, DependencyGraph& g) {
  if (f.is_atom()) {
    std::set<std::string> vs;
    for (const auto& t : f.terms) {
      vs.merge(variables(t));
      if (opts.constants_as_vertices) vs.merge(constants(t));
    }
    for (auto i = vs.begin(); i != vs.end(); ++i) {
      g.vertices.insert(*i);
      for (auto j = std::next(i); j != vs.end(); ++j) g.edges.emplace(*i, *j);
    }
    return;
  }
  for (const auto& c : f.children) add_atoms(c, opts, g);
}

}  // namespace

bool DependencyGraph::has_edge(const std::string& u, const std::string& v) const {
  return u < v ? edges.count({u, v}) > 0 : edges.count({v, u}) > 0;
}

std::vector<std::set<std::string>> DependencyGraph::components() const {
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& v : vertices) adj[v];
  for (const auto& [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<std::set<std::string>> out;
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (seen.count(v)) continue;
    std::set<std::string> comp;
    std::vector<std::string> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (const auto& w : adj[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

DependencyGraph dependency_graph(const Formula& f, const DependencyOptions& opts) {
  if (!is_conjunctive(f))
    throw std::invalid_argument("dependency graph needs a conjunctive formula");
  DependencyGraph g;
  g.vertices = variables(f);
  if (opts.constants_as_vertices) g.vertices.merge(constants(f));
  add_atoms(f, opts, g);
  return g;
}

bool is_connected_formula(const Formula& f, const DependencyOptions& opts) {
  if (!is_conjunctive(f) || !is_two_formula(f)) return false;
  return dependency_graph(f, opts).connected();
}

}  // namespace anaprop
