#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anaprop/structure.hpp"

namespace anaprop {

inline constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

// {n : a and b are joined by a walk of length n}. Positive lengths are
// closed under +2 within each parity, so three fields describe it exactly.
struct WalkLengthSet {
  bool self_zero = false;
  std::uint32_t min_even = kInfinity;  // smallest positive even member
  std::uint32_t min_odd = kInfinity;

  bool contains(std::uint64_t n) const;
  bool empty() const { return !self_zero && min_even == kInfinity && min_odd == kInfinity; }
  // Every natural number.
  static WalkLengthSet all() { return {true, 2, 1}; }

  friend bool operator==(const WalkLengthSet&, const WalkLengthSet&) = default;
};

std::string to_string(const WalkLengthSet& s);

WalkLengthSet wls_intersect(const WalkLengthSet& p, const WalkLengthSet& q);
WalkLengthSet wls_union(const WalkLengthSet& p, const WalkLengthSet& q);
bool wls_subset(const WalkLengthSet& p, const WalkLengthSet& q);
// p \ t is a subset of q \ t.
bool wls_subset_mod(const WalkLengthSet& p, const WalkLengthSet& q, const WalkLengthSet& t);
// Without length 0.
WalkLengthSet wls_positive(WalkLengthSet s);

class UndirectedGraph {
 public:
  explicit UndirectedGraph(std::vector<std::string> names);
  static UndirectedGraph with_size(std::size_t n);
  // Graph of the single binary relation of s (symmetrized).
  static UndirectedGraph from_structure(const FiniteStructure& s);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Element v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  // Throws UnknownElementError.
  Element vertex(std::string_view name) const;

  void add_edge(Element u, Element v);
  bool has_edge(Element u, Element v) const { return adj_.at(u).at(v); }
  const std::vector<Element>& neighbors(Element v) const { return nbrs_.at(v); }
  std::size_t edge_count() const;

  // Structure over the signature with one binary relation E.
  FiniteStructure to_structure(const std::string& name, const std::string& relation = "E") const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<Element>> nbrs_;
};

// Breadth-first search over (vertex, parity).
WalkLengthSet walk_length_set(const UndirectedGraph& g, Element a, Element b);
// All pairs, row-major.
std::vector<WalkLengthSet> walk_length_table(const UndirectedGraph& g);
// Lengths walkable between every pair of vertices.
WalkLengthSet trivial_lengths(const UndirectedGraph& g);

enum class PathCase { BothDisconnected, Maximal, Blocked };
std::string to_string(PathCase c);

struct PathVerdict {
  bool holds = false;
  PathCase kase = PathCase::BothDisconnected;
  WalkLengthSet shared;
  std::optional<std::uint64_t> blocking;  // competing target d'
};

// All four arrows are decided. Undirected types make arrows 0 and 1 (and
// 2 and 3) share their type, but not their competitors: arrow 1 ranges over
// c' with walks from d, arrow 0 over d' with walks from c. The two verdicts
// can differ, so the two-arrow reading is reported separately.
struct PathProportionVerdict {
  bool holds = false;
  // (G,H) a--b :. c--d, (G,H) b--a :. d--c, (H,G) c--d :. a--b, (H,G) d--c :. b--a
  std::array<PathVerdict, 4> arrows;
  bool two_arrow = false;  // arrows 0 and 2 only
};

// Arrow decision from the source type, the target type and the types of all
// competitors (d', W(c,d')), modulo the trivial lengths t.
PathVerdict decide_path_arrow(const WalkLengthSet& source, const WalkLengthSet& target,
                              const std::vector<std::pair<std::uint64_t, WalkLengthSet>>& competitors,
                              const WalkLengthSet& trivial);

// Walk tables and trivial lengths for a pair of graphs, computed once.
class PathContext {
 public:
  PathContext(const UndirectedGraph& g, const UndirectedGraph& h);

  std::size_t size_g() const { return ng_; }
  std::size_t size_h() const { return nh_; }
  const WalkLengthSet& trivial() const { return trivial_; }
  const WalkLengthSet& type_g(Element a, Element b) const { return wg_.at(a * ng_ + b); }
  const WalkLengthSet& type_h(Element c, Element d) const { return wh_.at(c * nh_ + d); }

  PathVerdict arrow(Element a, Element b, Element c, Element d) const;          // (G,H)
  PathVerdict reverse_arrow(Element c, Element d, Element a, Element b) const;  // (H,G)
  PathProportionVerdict proportion(Element a, Element b, Element c, Element d) const;

 private:
  std::size_t ng_, nh_;
  std::vector<WalkLengthSet> wg_, wh_;
  WalkLengthSet trivial_;
};

PathVerdict path_arrow_holds(const UndirectedGraph& g, const UndirectedGraph& h, Element a,
                             Element b, Element c, Element d);
PathProportionVerdict path_proportion_holds(const UndirectedGraph& g, const UndirectedGraph& h,
                                            Element a, Element b, Element c, Element d);

// Two-case characterization of the arrow a -- b :. c -- d by connectivity,
// read literally: connected means a walk of some length n >= 0, and the
// competitor conditions range over lengths n >= 1.
bool connectivity_characterization(const WalkLengthSet& wab, const WalkLengthSet& wcd,
                                   const std::vector<std::pair<std::uint64_t, WalkLengthSet>>& competitors);
bool connectivity_characterization(const PathContext& ctx, Element a, Element b, Element c,
                                   Element d);

// ---------------------------------------------------------------------------
// The ray graph on N with edges n -- n+1.

WalkLengthSet gn_walk_set(std::uint64_t a, std::uint64_t b);

// H has a walk of length |a-b| from c to d.
bool gn_target_proportion(std::uint64_t a, std::uint64_t b, const UndirectedGraph& h, Element c,
                          Element d);
// (G_N, H) |= a : b :: c : d decided by the maximality machinery.
PathProportionVerdict gn_target_engine(std::uint64_t a, std::uint64_t b, const UndirectedGraph& h,
                                       Element c, Element d);
// Closed form of the engine: the shortest walk from c to d with the parity
// of |a-b| has length exactly |a-b|.
bool gn_target_shortest_walk(std::uint64_t a, std::uint64_t b, const UndirectedGraph& h,
                             Element c, Element d);

// |a-b| = |c-d|.
bool gn_proportion(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);
PathProportionVerdict gn_proportion_engine(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                           std::uint64_t d);

}  // namespace anaprop
