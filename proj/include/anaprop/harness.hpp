#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "anaprop/graph.hpp"
#include "anaprop/proportion.hpp"

namespace anaprop::harness {

// ---------------------------------------------------------------------------
// Random inputs. Every trial draws from its own generator seeded by
// (seed, trial), so results do not depend on trial order.

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

std::vector<std::string> element_names(std::size_t n, const std::string& prefix = "e");
FiniteStructure bare_set(std::size_t n);
// Unary functions f0, f1, ... with uniformly random tables.
FiniteStructure random_unary_structure(std::mt19937_64& rng, std::size_t n, int functions,
                                       const std::string& name = "R");
// One binary operation "o" with a uniformly random table.
FiniteStructure random_binary_algebra(std::mt19937_64& rng, std::size_t n,
                                      const std::string& name = "M");
// Each unordered pair (and each loop, if allowed) is an edge with probability density.
UndirectedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density,
                             bool loops = true);
Bijection random_permutation(std::mt19937_64& rng, std::size_t n);

// ---------------------------------------------------------------------------
// Counterexample catalog

struct CatalogClaim {
  // Indices into CatalogEntry::structures: source and target of the proportion.
  std::size_t source = 0;
  std::size_t target = 0;
  std::array<std::string, 4> args;
  bool expected = true;
};

struct CatalogEntry {
  std::string name;    // the property the entry refutes
  std::string family;  // "general" or "graphs"
  std::vector<FiniteStructure> structures;
  FragmentSpec fragment;  // frozen bounds, or the path fragment for graphs
  std::vector<CatalogClaim> claims;
};

std::vector<CatalogEntry> general_catalog();
std::vector<CatalogEntry> graph_catalog();
std::string describe(const CatalogClaim& c, const CatalogEntry& e);

// Engine verdict for the claim under the entry's fragment, or under frag.
bool evaluate_claim(const CatalogEntry& e, const CatalogClaim& c);
bool evaluate_claim(const CatalogEntry& e, const CatalogClaim& c, const FragmentSpec& frag);

// ---------------------------------------------------------------------------
// Suites

struct Failure {
  std::string structure;
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // the first few
  std::optional<Bounds> bounds;
  double wall_seconds = 0;
  // Side observations that do not count as failures.
  std::vector<std::string> notes;

  bool passed() const { return failure_count == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 0;        // 0 keeps each suite's own default
  std::optional<Bounds> bounds;  // overrides the suite's bounds where it has any
  std::size_t max_failures = 20; // failures kept in the report; all are counted
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

std::string to_json(const SuiteReport& r, int indent = 2);
std::string to_text(const SuiteReport& r);

// ---------------------------------------------------------------------------
// Configuration: INI-style key = value pairs, optionally in sections.
// Keys are returned as "section.key" ("key" outside sections).

std::map<std::string, std::string> parse_config(std::istream& in);

}  // namespace anaprop::harness
