#include "doctest.h"

#include <random>

#include "anaprop/parser.hpp"
#include "anaprop/structure.hpp"

using namespace anaprop;

namespace {

FiniteStructure collapse() {
  return parse_structures(R"(
    structure S {
      universe: a b
      function f/1 { (a) -> b, (b) -> b }
    })")[0];
}

FiniteStructure swap_cd() {
  return parse_structures(R"(
    structure S {
      universe: c d
      function f/1 { (c) -> d, (d) -> c }
    })")[0];
}

FiniteStructure truncated_successor() {
  Signature sig;
  sig.add_function("S", 1);
  FiniteStructure s("N6", sig, {"0", "1", "2", "3", "4", "5"});
  for (Element n = 0; n < 6; ++n) s.set_function("S", {n}, std::min<Element>(n + 1, 5));
  return s;
}

// Evaluation by recursion on the syntax tree with explicit loops, for
// comparison against the library evaluator.
bool naive(const FiniteStructure& s, const Formula& f, Assignment sigma) {
  switch (f.kind) {
    case Formula::Kind::Equality:
      return evaluate_term(s, f.terms[0], sigma) == evaluate_term(s, f.terms[1], sigma);
    case Formula::Kind::Relation: {
      std::vector<Element> tuple;
      for (const auto& t : f.terms) tuple.push_back(evaluate_term(s, t, sigma));
      return s.holds(*s.signature().relation_index(f.symbol), tuple);
    }
    case Formula::Kind::And:
      for (const auto& c : f.children)
        if (!naive(s, c, sigma)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children)
        if (naive(s, c, sigma)) return true;
      return false;
    case Formula::Kind::Not: return !naive(s, f.children[0], sigma);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool ex = f.kind == Formula::Kind::Exists;
      for (Element e = 0; e < s.size(); ++e) {
        sigma[f.symbol] = e;
        if (naive(s, f.children[0], sigma) == ex) return ex;
      }
      return !ex;
    }
  }
  return false;
}

FiniteStructure random_structure(std::mt19937_64& rng, std::size_t n) {
  Signature sig;
  sig.add_function("f", 1).add_relation("E", 2).add_constant("k");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  FiniteStructure s("R", sig, names);
  for (Element e = 0; e < n; ++e) {
    s.set_function("f", {e}, rng() % n);
    for (Element u = 0; u < n; ++u)
      if (rng() % 3 == 0) s.add_tuple("E", {e, u});
  }
  s.set_constant("k", rng() % n);
  return s;
}

}  // namespace

TEST_CASE("term evaluation") {
  auto s = collapse();
  CHECK(evaluate_term(s, parse_term("f(x)", s.signature()), {{"x", 0}}) == 1);

  Signature sig;
  sig.add_constant("c");
  FiniteStructure k("K", sig, {"a", "b"});
  k.set_constant("c", 0);
  CHECK(evaluate_term(k, Term::constant("c"), {}) == 0);

  auto n = truncated_successor();
  CHECK(evaluate_term(n, parse_term("S(S(x))", n.signature()), {{"x", 1}}) == 3);
  CHECK_THROWS_AS(evaluate_term(n, Term::variable("x"), {}), EvaluationError);
}

TEST_CASE("satisfaction") {
  auto s = collapse();
  CHECK(satisfies(s, parse_formula("f(x) = y", s.signature()), {{"x", 0}, {"y", 1}}));

  FiniteStructure three("T", Signature{}, {"1", "2", "3"});
  CHECK_FALSE(satisfies(three, parse_formula("x = y", Signature{}), {{"x", 0}, {"y", 1}}));

  auto square = parse_structures("graph Sq { universe: 1 2 3 4  relation E/2 { (1,2), (2,3), (3,4), (4,1) } }")[0];
  Formula pi2 = parse_formula("exists z1 . x E z1 & z1 E y", square.signature());
  CHECK(satisfies(square, pi2, {{"x", square.element("1")}, {"y", square.element("3")}}));
  CHECK_FALSE(satisfies(square, pi2, {{"x", square.element("1")}, {"y", square.element("2")}}));
}

TEST_CASE("extensions") {
  FiniteStructure three("T", Signature{}, {"1", "2", "3"});
  auto id = extension(three, parse_formula("x = y", Signature{}));
  CHECK(id.count() == 3);
  for (Element e = 0; e < 3; ++e) CHECK(id.contains(e, e));

  auto s = collapse();
  auto fx = extension(s, parse_formula("f(x) = y", s.signature()));
  CHECK(fx.count() == 2);
  CHECK(fx.contains(0, 1));
  CHECK(fx.contains(1, 1));

  auto edgeless = parse_structures("graph G { universe: a b c }")[0];
  CHECK(extension(edgeless, parse_formula("x E y", edgeless.signature())).empty());
  CHECK_THROWS_AS(extension(s, parse_formula("f(x) = x", s.signature())), std::invalid_argument);
}

TEST_CASE("isomorphisms") {
  auto sw = swap_cd();
  auto isos = find_isomorphisms(sw, sw);
  CHECK(isos == std::vector<Bijection>{{0, 1}, {1, 0}});

  auto c = collapse();
  CHECK(find_isomorphisms(c, c) == std::vector<Bijection>{{0, 1}});
  CHECK_FALSE(is_isomorphism({1, 0}, c, c));
  CHECK(respects({0, 1}, c, c, parse_formula("f(x) = y", c.signature())));
  CHECK_FALSE(respects({1, 0}, c, c, parse_formula("f(x) = y", c.signature())));

  auto gs = parse_structures("graph A { universe: p q }  graph B { universe: p q relation E/2 { (p,q) } }");
  CHECK(find_isomorphisms(gs[0], gs[1]).empty());
  CHECK_THROWS_AS(find_isomorphisms(c, gs[0]), SignatureError);
}

TEST_CASE("structure parser") {
  auto gs = parse_structures(R"(
    # comment
    graph G { universe: a b c  relation E/2 { (a,b) } }
    structure M {
      universe: 0 1
      function g/2 { (0,0) -> 0, (0,1) -> 1, (1,0) -> 1, (1,1) -> 0 };
      constant z = 0
    })");
  REQUIRE(gs.size() == 2);
  auto e = *gs[0].signature().relation_index("E");
  CHECK(gs[0].holds(e, {gs[0].element("b"), gs[0].element("a")}));
  CHECK(gs[1].apply(*gs[1].signature().function_index("g"), {1, 1}) == 0);
  CHECK(gs[1].constant(*gs[1].signature().constant_index("z")) == 0);

  CHECK_THROWS_AS(parse_structures("structure X { universe: a  function f/1 { } }"), ParseError);
  CHECK_THROWS_AS(parse_structures("structure X { universe: a  relation E/2 { (a,q) } }"),
                  ParseError);
  CHECK_THROWS_AS(parse_structures("structure X { universe: a a }"), ParseError);
  CHECK_THROWS_AS(parse_structures("structure X { universe: a "), ParseError);
  CHECK_THROWS_AS(load_structures("/nonexistent/file.st"), std::ios_base::failure);
  CHECK_THROWS_AS(gs[0].element("zz"), UnknownElementError);
}

TEST_CASE("random structures: evaluator agrees with naive recursion") {
  const char* texts[] = {
      "exists z1 . x E z1 & z1 E y",
      "forall z1 . x E z1 | !(z1 E y)",
      "f(x) = y & !(x = k)",
      "exists z1 . forall z2 . f(z1) = x & (z2 E y | z2 = z1)",
      "x E f(y) | f(f(x)) = k",
  };
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    std::seed_seq seq{std::uint64_t{11}, trial};
    std::mt19937_64 rng(seq);
    auto s = random_structure(rng, 1 + trial % 4);
    for (const char* t : texts) {
      Formula f = parse_formula(t, s.signature());
      auto ext = extension(s, f);
      for (Element a = 0; a < s.size(); ++a)
        for (Element b = 0; b < s.size(); ++b) {
          Assignment sigma{{"x", a}, {"y", b}};
          bool sat = satisfies(s, f, sigma);
          CHECK(sat == naive(s, f, sigma));
          CHECK(sat == ext.contains(a, b));
        }
    }
    // Automorphisms respect every formula.
    for (const auto& h : find_isomorphisms(s, s)) {
      CHECK(is_isomorphism(h, s, s));
      for (const char* t : texts) CHECK(respects(h, s, s, parse_formula(t, s.signature())));
    }
  }
}

TEST_CASE("transport yields an isomorphic copy") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto s = random_structure(rng, 4);
    Bijection h{0, 1, 2, 3};
    std::shuffle(h.begin(), h.end(), rng);
    auto t = transport(s, h, {"p", "q", "r", "s"}, "T");
    CHECK(is_isomorphism(h, s, t));
    auto isos = find_isomorphisms(s, t);
    CHECK(std::find(isos.begin(), isos.end(), h) != isos.end());
  }
}
