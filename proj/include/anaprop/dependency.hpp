#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "anaprop/formula.hpp"

namespace anaprop {

struct DependencyOptions {
  // Treat constant symbols as vertices too. Off by default: vertices are the
  // variables of the formula only.
  bool constants_as_vertices = false;
};

// Undirected graph over the variables of a conjunctive formula with an edge
// between two variables iff they co-occur in some atom.
struct DependencyGraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;  // first < second

  bool has_edge(const std::string& u, const std::string& v) const;
  std::vector<std::set<std::string>> components() const;
  bool connected() const { return components().size() <= 1; }
};

// Throws std::invalid_argument for non-conjunctive input.
DependencyGraph dependency_graph(const Formula& f, const DependencyOptions& opts = {});

// Conjunctive, free variables exactly {x, y}, connected dependency graph.
bool is_connected_formula(const Formula& f, const DependencyOptions& opts = {});

}  // namespace anaprop
