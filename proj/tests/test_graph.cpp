#include "doctest.h"

#include <random>

#include <Eigen/Dense>

#include "anaprop/graph.hpp"
#include "anaprop/parser.hpp"
#include "anaprop/proportion.hpp"

using namespace anaprop;

namespace {

UndirectedGraph graph(std::size_t n, std::initializer_list<std::pair<Element, Element>> edges) {
  auto g = UndirectedGraph::with_size(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

UndirectedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  auto g = UndirectedGraph::with_size(n);
  std::bernoulli_distribution coin(density);
  for (Element u = 0; u < n; ++u)
    for (Element v = u; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Reachability by boolean adjacency powers: column n of row (a,b).
std::vector<Eigen::MatrixXi> powers(const UndirectedGraph& g, int max_n) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(n, n);
  for (Element u = 0; u < g.size(); ++u)
    for (Element v : g.neighbors(u)) adj(u, v) = 1;
  std::vector<Eigen::MatrixXi> out{Eigen::MatrixXi::Identity(n, n)};
  for (int k = 1; k <= max_n; ++k)
    out.push_back((out.back() * adj).unaryExpr([](int x) { return x > 0 ? 1 : 0; }));
  return out;
}

}  // namespace

TEST_CASE("walk length sets") {
  auto g = graph(4, {{0, 2}});  // a b c d with edge a -- c
  CHECK(walk_length_set(g, 0, 2) == WalkLengthSet{false, kInfinity, 1});
  CHECK(walk_length_set(g, 1, 3).empty());
  CHECK(walk_length_set(g, 1, 1) == WalkLengthSet{true, kInfinity, kInfinity});
  CHECK(walk_length_set(g, 0, 0) == WalkLengthSet{true, 2, kInfinity});
  auto loop = graph(1, {{0, 0}});
  CHECK(walk_length_set(loop, 0, 0) == WalkLengthSet::all());
  CHECK(to_string(WalkLengthSet{false, kInfinity, 1}) == "{odd>=1}");
}

TEST_CASE("walk set algebra") {
  WalkLengthSet odd1{false, kInfinity, 1}, odd3{false, kInfinity, 3}, none{};
  CHECK(wls_intersect(odd1, odd3) == odd3);
  CHECK(wls_intersect(odd1, none).empty());
  CHECK(wls_subset(WalkLengthSet::all(), WalkLengthSet::all()));
  CHECK(wls_subset(odd3, odd1));
  CHECK_FALSE(wls_subset(odd1, odd3));
  CHECK(wls_union(odd3, WalkLengthSet{true, 4, kInfinity}) == WalkLengthSet{true, 4, 3});
  CHECK(wls_subset_mod(odd1, odd3, WalkLengthSet{false, kInfinity, 1}));
  CHECK(wls_positive(WalkLengthSet::all()) == WalkLengthSet{false, 2, 1});
}

TEST_CASE("walk sets match adjacency powers") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    std::seed_seq seq{std::uint64_t{17}, trial};
    std::mt19937_64 rng(seq);
    auto g = random_graph(rng, 1 + trial % 7, trial % 2 ? 0.2 : 0.5);
    auto pw = powers(g, 14);
    auto table = walk_length_table(g);
    for (Element a = 0; a < g.size(); ++a)
      for (Element b = 0; b < g.size(); ++b)
        for (int n = 0; n <= 14; ++n)
          CHECK(table[a * g.size() + b].contains(n) == (pw[n](a, b) == 1));
  }
}

TEST_CASE("path arrows") {
  auto edgeless = UndirectedGraph::with_size(3);
  auto v = path_arrow_holds(edgeless, edgeless, 0, 1, 1, 2);
  CHECK(v.holds);
  CHECK(v.kase == PathCase::BothDisconnected);

  auto g = graph(4, {{0, 2}});
  auto w = path_arrow_holds(g, g, 0, 2, 1, 3);
  CHECK_FALSE(w.holds);
  CHECK(w.kase == PathCase::Blocked);

  auto tri = graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(path_arrow_holds(tri, tri, 2, 2, 2, 2).holds);
}

TEST_CASE("path proportions") {
  auto e4 = UndirectedGraph::with_size(4);
  CHECK(path_proportion_holds(e4, e4, 0, 1, 2, 3).holds);
  auto ab = graph(4, {{0, 1}});
  CHECK_FALSE(path_proportion_holds(ab, ab, 0, 1, 2, 3).holds);

  auto ac = graph(4, {{0, 2}});
  CHECK(path_proportion_holds(ac, ac, 0, 1, 2, 3).holds);
  CHECK_FALSE(path_proportion_holds(ac, ac, 0, 2, 1, 3).holds);

  // Arrow 0 holds and arrow 1 is blocked: the two-arrow reading is not
  // equivalent to the four-arrow one.
  auto g = graph(3, {{0, 0}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  auto h = graph(4, {{0, 3}, {2, 2}, {3, 3}});
  PathContext gh(g, h);
  CHECK(gh.trivial().empty());
  auto p = gh.proportion(0, 0, 0, 3);
  CHECK(p.arrows[0].holds);
  CHECK_FALSE(p.arrows[1].holds);
  CHECK_FALSE(p.holds);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = random_graph(rng, 1 + trial % 6, 0.3);
    PathContext ctx(r, r);
    for (Element a = 0; a < r.size(); ++a)
      for (Element b = 0; b < r.size(); ++b) CHECK(ctx.proportion(a, b, b, a).holds);
  }
}

TEST_CASE("path engine agrees with the formula engine") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_graph(rng, 1 + trial % 4, 0.35);
    auto h = random_graph(rng, 1 + (trial / 4) % 4, 0.35);
    auto sg = g.to_structure("G"), sh = h.to_structure("H");
    auto idx = build_index(sg, sh, FragmentSpec::path());
    PathContext ctx(g, h);
    for (Element a = 0; a < g.size(); ++a)
      for (Element b = 0; b < g.size(); ++b)
        for (Element c = 0; c < h.size(); ++c)
          for (Element d = 0; d < h.size(); ++d) {
            CHECK(ctx.arrow(a, b, c, d).holds == arrow_holds(idx, a, b, c, d).holds);
            CHECK(ctx.reverse_arrow(c, d, a, b).holds ==
                  arrow_holds(idx, c, d, a, b, Direction::Backward).holds);
            auto full = proportion_holds(idx, a, b, c, d);
            auto mine = ctx.proportion(a, b, c, d);
            for (int i = 0; i < 4; ++i) CHECK(mine.arrows[i].holds == full.arrows[i].holds);
            CHECK(mine.holds == full.holds);
            CHECK(mine.two_arrow == (full.arrows[0].holds && full.arrows[2].holds));
            CHECK(ctx.type_g(a, b) == ctx.type_g(b, a));
          }
  }
}

TEST_CASE("structure round trip") {
  auto s = parse_structures("graph G { universe: a b c  relation E/2 { (a,b), (c,c) } }")[0];
  auto g = UndirectedGraph::from_structure(s);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.vertex("c") == 2);
  CHECK_THROWS_AS(g.vertex("q"), UnknownElementError);
}

TEST_CASE("ray graph") {
  CHECK(gn_walk_set(0, 3) == WalkLengthSet{false, kInfinity, 3});
  CHECK(gn_walk_set(2, 2) == WalkLengthSet{true, 2, kInfinity});
  CHECK(gn_walk_set(5, 0) == WalkLengthSet{false, kInfinity, 5});

  auto tri = graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(gn_target_proportion(0, 2, tri, 1, 1));
  auto e2 = UndirectedGraph::with_size(2);
  CHECK_FALSE(gn_target_proportion(0, 1, e2, 0, 1));

  CHECK(gn_proportion(0, 3, 4, 7));
  CHECK_FALSE(gn_proportion(0, 3, 4, 6));
  CHECK(gn_proportion(6, 6, 2, 2));
  CHECK(gn_proportion_engine(0, 3, 4, 7).holds);
  CHECK_FALSE(gn_proportion_engine(0, 3, 4, 6).holds);

  // Engine and its closed form on a path graph 0 - 1 - 2 - 3.
  auto p4 = graph(4, {{0, 1}, {1, 2}, {2, 3}});
  for (std::uint64_t a = 0; a <= 6; ++a)
    for (std::uint64_t b = 0; b <= 6; ++b)
      for (Element c = 0; c < 4; ++c)
        for (Element d = 0; d < 4; ++d)
          CHECK(gn_target_engine(a, b, p4, c, d).holds == gn_target_shortest_walk(a, b, p4, c, d));
}

TEST_CASE("connectivity characterization on clear cases") {
  auto e4 = UndirectedGraph::with_size(4);
  PathContext ctx(e4, e4);
  CHECK(connectivity_characterization(ctx, 0, 1, 2, 3));
  auto ac = graph(4, {{0, 2}});
  PathContext c2(ac, ac);
  CHECK_FALSE(connectivity_characterization(c2, 0, 2, 1, 3));
  CHECK(connectivity_characterization(c2, 0, 2, 0, 2));
}
