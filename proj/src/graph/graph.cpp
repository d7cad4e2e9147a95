#include "anaprop/graph.hpp"

#include <algorithm>
#include <deque>

namespace anaprop {

bool WalkLengthSet::contains(std::uint64_t n) const {
  if (n == 0) return self_zero;
  return n % 2 == 0 ? n >= min_even : n >= min_odd;
}

std::string to_string(const WalkLengthSet& s) {
  if (s.empty()) return "{}";
  std::string out = "{";
  auto add = [&](const std::string& part) {
    if (out.size() > 1) out += ", ";
    out += part;
  };
  if (s.self_zero) add("0");
  if (s.min_even != kInfinity) add("even>=" + std::to_string(s.min_even));
  if (s.min_odd != kInfinity) add("odd>=" + std::to_string(s.min_odd));
  return out + "}";
}

WalkLengthSet wls_intersect(const WalkLengthSet& p, const WalkLengthSet& q) {
  return {p.self_zero && q.self_zero, std::max(p.min_even, q.min_even),
          std::max(p.min_odd, q.min_odd)};
}

WalkLengthSet wls_union(const WalkLengthSet& p, const WalkLengthSet& q) {
  return {p.self_zero || q.self_zero, std::min(p.min_even, q.min_even),
          std::min(p.min_odd, q.min_odd)};
}

bool wls_subset(const WalkLengthSet& p, const WalkLengthSet& q) {
  return (!p.self_zero || q.self_zero) && (p.min_even == kInfinity || q.min_even <= p.min_even) &&
         (p.min_odd == kInfinity || q.min_odd <= p.min_odd);
}

bool wls_subset_mod(const WalkLengthSet& p, const WalkLengthSet& q, const WalkLengthSet& t) {
  return wls_subset(p, wls_union(q, t));
}

WalkLengthSet wls_positive(WalkLengthSet s) {
  s.self_zero = false;
  return s;
}

// ---------------------------------------------------------------------------

UndirectedGraph::UndirectedGraph(std::vector<std::string> names) : names_(std::move(names)) {
  adj_.assign(size(), std::vector<bool>(size(), false));
  nbrs_.resize(size());
}

UndirectedGraph UndirectedGraph::with_size(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return UndirectedGraph(std::move(names));
}

UndirectedGraph UndirectedGraph::from_structure(const FiniteStructure& s) {
  const Signature& sig = s.signature();
  if (sig.relations().size() != 1 || sig.relations()[0].arity != 2 || !sig.functions().empty())
    throw SignatureError("'" + s.name() + "' is not a graph: expected one binary relation");
  UndirectedGraph g(s.element_names());
  for (Element u = 0; u < s.size(); ++u)
    for (Element v = 0; v < s.size(); ++v) {
      Element t[2] = {u, v};
      if (s.holds(0, t)) g.add_edge(u, v);
    }
  return g;
}

Element UndirectedGraph::vertex(std::string_view name) const {
  for (Element v = 0; v < size(); ++v)
    if (names_[v] == name) return v;
  throw UnknownElementError(std::string(name));
}

void UndirectedGraph::add_edge(Element u, Element v) {
  if (u >= size() || v >= size()) throw UnknownElementError("#" + std::to_string(std::max(u, v)));
  if (adj_[u][v]) return;
  adj_[u][v] = adj_[v][u] = true;
  nbrs_[u].push_back(v);
  if (u != v) nbrs_[v].push_back(u);
  std::sort(nbrs_[u].begin(), nbrs_[u].end());
  std::sort(nbrs_[v].begin(), nbrs_[v].end());
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t n = 0;
  for (Element u = 0; u < size(); ++u)
    for (Element v = u; v < size(); ++v) n += adj_[u][v];
  return n;
}

FiniteStructure UndirectedGraph::to_structure(const std::string& name,
                                              const std::string& relation) const {
  Signature sig;
  sig.add_relation(relation, 2);
  FiniteStructure s(name, sig, names_);
  for (Element u = 0; u < size(); ++u)
    for (Element v = 0; v < size(); ++v)
      if (adj_[u][v]) s.add_tuple(relation, {u, v});
  return s;
}

namespace {

// dist[v][p]: shortest walk from a to v with length parity p.
std::vector<std::array<std::uint32_t, 2>> parity_distances(const UndirectedGraph& g, Element a) {
  std::vector<std::array<std::uint32_t, 2>> dist(g.size(), {kInfinity, kInfinity});
  std::deque<std::pair<Element, int>> queue;
  dist[a][0] = 0;
  queue.emplace_back(a, 0);
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop_front();
    for (Element w : g.neighbors(v)) {
      if (dist[w][1 - p] != kInfinity) continue;
      dist[w][1 - p] = dist[v][p] + 1;
      queue.emplace_back(w, 1 - p);
    }
  }
  return dist;
}

WalkLengthSet from_distances(const UndirectedGraph& g, Element a, Element b,
                             const std::vector<std::array<std::uint32_t, 2>>& dist) {
  WalkLengthSet s;
  s.min_odd = dist[b][1];
  if (a == b) {
    s.self_zero = true;
    s.min_even = g.neighbors(a).empty() ? kInfinity : 2;
  } else {
    s.min_even = dist[b][0];
  }
  return s;
}

}  // namespace

WalkLengthSet walk_length_set(const UndirectedGraph& g, Element a, Element b) {
  if (a >= g.size()) throw UnknownElementError("#" + std::to_string(a));
  if (b >= g.size()) throw UnknownElementError("#" + std::to_string(b));
  return from_distances(g, a, b, parity_distances(g, a));
}

std::vector<WalkLengthSet> walk_length_table(const UndirectedGraph& g) {
  std::vector<WalkLengthSet> out;
  out.reserve(g.size() * g.size());
  for (Element a = 0; a < g.size(); ++a) {
    auto dist = parity_distances(g, a);
    for (Element b = 0; b < g.size(); ++b) out.push_back(from_distances(g, a, b, dist));
  }
  return out;
}

namespace {

WalkLengthSet intersect_all(const std::vector<WalkLengthSet>& sets) {
  WalkLengthSet t = WalkLengthSet::all();
  for (const auto& s : sets) t = wls_intersect(t, s);
  return t;
}

}  // namespace

WalkLengthSet trivial_lengths(const UndirectedGraph& g) { return intersect_all(walk_length_table(g)); }

std::string to_string(PathCase c) {
  switch (c) {
    case PathCase::BothDisconnected: return "bothDisconnected";
    case PathCase::Maximal: return "maximal";
    case PathCase::Blocked: return "blocked";
  }
  return "?";
}

PathVerdict decide_path_arrow(const WalkLengthSet& source, const WalkLengthSet& target,
                              const std::vector<std::pair<std::uint64_t, WalkLengthSet>>& competitors,
                              const WalkLengthSet& trivial) {
  PathVerdict v;
  v.shared = wls_intersect(source, target);
  if (wls_subset(wls_union(source, target), trivial)) {
    v.holds = true;
    v.kase = PathCase::BothDisconnected;
    return v;
  }
  v.kase = PathCase::Blocked;
  if (wls_subset(v.shared, trivial)) return v;
  for (const auto& [dp, w] : competitors) {
    const auto other = wls_intersect(source, w);
    if (wls_subset_mod(v.shared, other, trivial) && !wls_subset_mod(other, v.shared, trivial)) {
      v.blocking = dp;
      return v;
    }
  }
  v.holds = true;
  v.kase = PathCase::Maximal;
  return v;
}

PathContext::PathContext(const UndirectedGraph& g, const UndirectedGraph& h)
    : ng_(g.size()), nh_(h.size()), wg_(walk_length_table(g)), wh_(walk_length_table(h)) {
  trivial_ = wls_intersect(intersect_all(wg_), intersect_all(wh_));
}

PathVerdict PathContext::arrow(Element a, Element b, Element c, Element d) const {
  std::vector<std::pair<std::uint64_t, WalkLengthSet>> comp;
  for (Element dp = 0; dp < nh_; ++dp) comp.emplace_back(dp, type_h(c, dp));
  return decide_path_arrow(type_g(a, b), type_h(c, d), comp, trivial_);
}

PathVerdict PathContext::reverse_arrow(Element c, Element d, Element a, Element b) const {
  std::vector<std::pair<std::uint64_t, WalkLengthSet>> comp;
  for (Element bp = 0; bp < ng_; ++bp) comp.emplace_back(bp, type_g(a, bp));
  return decide_path_arrow(type_h(c, d), type_g(a, b), comp, trivial_);
}

namespace {

PathProportionVerdict combine(std::array<PathVerdict, 4> arrows) {
  PathProportionVerdict p;
  p.arrows = std::move(arrows);
  p.two_arrow = p.arrows[0].holds && p.arrows[2].holds;
  p.holds = p.two_arrow && p.arrows[1].holds && p.arrows[3].holds;
  return p;
}

}  // namespace

PathProportionVerdict PathContext::proportion(Element a, Element b, Element c, Element d) const {
  return combine({arrow(a, b, c, d), arrow(b, a, d, c), reverse_arrow(c, d, a, b),
                  reverse_arrow(d, c, b, a)});
}

PathVerdict path_arrow_holds(const UndirectedGraph& g, const UndirectedGraph& h, Element a,
                             Element b, Element c, Element d) {
  if (a >= g.size() || b >= g.size() || c >= h.size() || d >= h.size())
    throw UnknownElementError("vertex outside the graph");
  return PathContext(g, h).arrow(a, b, c, d);
}

PathProportionVerdict path_proportion_holds(const UndirectedGraph& g, const UndirectedGraph& h,
                                            Element a, Element b, Element c, Element d) {
  if (a >= g.size() || b >= g.size() || c >= h.size() || d >= h.size())
    throw UnknownElementError("vertex outside the graph");
  return PathContext(g, h).proportion(a, b, c, d);
}

bool connectivity_characterization(const WalkLengthSet& wab, const WalkLengthSet& wcd,
                                   const std::vector<std::pair<std::uint64_t, WalkLengthSet>>& competitors) {
  const bool ab = !wab.empty();
  const bool cd = !wcd.empty();
  if (!ab && !cd) return true;
  if (!ab || !cd) return false;
  const auto shared = wls_positive(wls_intersect(wab, wcd));
  for (const auto& [dp, w] : competitors) {
    bool implied = wls_subset(shared, w);
    bool extra = !wls_subset(wls_positive(wls_intersect(wab, w)), wcd);
    if (implied && extra) return false;
  }
  return true;
}

bool connectivity_characterization(const PathContext& ctx, Element a, Element b, Element c,
                                   Element d) {
  std::vector<std::pair<std::uint64_t, WalkLengthSet>> comp;
  for (Element dp = 0; dp < ctx.size_h(); ++dp)
    if (dp != d) comp.emplace_back(dp, ctx.type_h(c, dp));
  return connectivity_characterization(ctx.type_g(a, b), ctx.type_h(c, d), comp);
}

// ---------------------------------------------------------------------------
// Ray graph

namespace {

std::uint64_t distance(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

std::uint32_t narrow(std::uint64_t k) {
  if (k >= kInfinity) throw std::out_of_range("ray distance too large");
  return static_cast<std::uint32_t>(k);
}

}  // namespace

WalkLengthSet gn_walk_set(std::uint64_t a, std::uint64_t b) {
  const auto k = narrow(distance(a, b));
  if (k == 0) return {true, 2, kInfinity};
  if (k % 2 == 0) return {false, k, kInfinity};
  return {false, kInfinity, k};
}

bool gn_target_proportion(std::uint64_t a, std::uint64_t b, const UndirectedGraph& h, Element c,
                          Element d) {
  return walk_length_set(h, c, d).contains(distance(a, b));
}

PathProportionVerdict gn_target_engine(std::uint64_t a, std::uint64_t b, const UndirectedGraph& h,
                                       Element c, Element d) {
  if (c >= h.size() || d >= h.size()) throw UnknownElementError("vertex outside the graph");
  // No length is walkable between every pair of the ray, so nothing is trivial.
  const WalkLengthSet none;
  const auto source = gn_walk_set(a, b);
  const auto target = walk_length_set(h, c, d);

  const auto target_rev = walk_length_set(h, d, c);
  auto in_h = [&](Element from) {
    std::vector<std::pair<std::uint64_t, WalkLengthSet>> out;
    for (Element x = 0; x < h.size(); ++x) out.emplace_back(x, walk_length_set(h, from, x));
    return out;
  };
  // Competitors x with |from-x| > |a-b| have smaller types of the same
  // parity or types of the other parity, and cannot block.
  const auto k = distance(a, b);
  auto on_ray = [&](std::uint64_t from) {
    std::vector<std::pair<std::uint64_t, WalkLengthSet>> out;
    for (std::uint64_t x = from > k + 1 ? from - k - 1 : 0; x <= from + k + 1; ++x)
      out.emplace_back(x, gn_walk_set(from, x));
    return out;
  };
  return combine({decide_path_arrow(source, target, in_h(c), none),
                  decide_path_arrow(source, target_rev, in_h(d), none),
                  decide_path_arrow(target, source, on_ray(a), none),
                  decide_path_arrow(target_rev, source, on_ray(b), none)});
}

bool gn_target_shortest_walk(std::uint64_t a, std::uint64_t b, const UndirectedGraph& h,
                             Element c, Element d) {
  const auto k = distance(a, b);
  const auto w = walk_length_set(h, c, d);
  std::uint64_t shortest = k % 2 == 0 ? (w.self_zero ? 0 : w.min_even) : w.min_odd;
  return shortest == k;
}

bool gn_proportion(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return distance(a, b) == distance(c, d);
}

PathProportionVerdict gn_proportion_engine(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                           std::uint64_t d) {
  const WalkLengthSet none;
  const auto k = std::max(distance(a, b), distance(c, d));
  auto competitors = [&](std::uint64_t from) {
    std::vector<std::pair<std::uint64_t, WalkLengthSet>> out;
    for (std::uint64_t x = from > k + 1 ? from - k - 1 : 0; x <= from + k + 1; ++x)
      out.emplace_back(x, gn_walk_set(from, x));
    return out;
  };
  const auto ab = gn_walk_set(a, b), cd = gn_walk_set(c, d);
  return combine({decide_path_arrow(ab, cd, competitors(c), none),
                  decide_path_arrow(ab, cd, competitors(d), none),
                  decide_path_arrow(cd, ab, competitors(a), none),
                  decide_path_arrow(cd, ab, competitors(b), none)});
}

}  // namespace anaprop
