#include "doctest.h"

#include <random>

#include "anaprop/dependency.hpp"
#include "anaprop/parser.hpp"

using namespace anaprop;

namespace {

Signature graph_sig() {
  Signature s;
  s.add_relation("E", 2);
  return s;
}

Signature mixed_sig() {
  Signature s;
  s.add_relation("P", 1).add_relation("R", 1).add_relation("E", 2).add_relation("T", 3);
  s.add_function("f", 1).add_function("g", 2);
  s.add_constant("c0");
  return s;
}

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 2);
  int k = pick(rng);
  if (k <= 1) return Term::variable(vars[rng() % vars.size()]);
  if (k == 2) return Term::constant("c0");
  if (k == 3) return Term::apply("f", {random_term(rng, vars, depth - 1)});
  return Term::apply("g", {random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1)});
}

Formula random_formula(std::mt19937_64& rng, std::vector<std::string>& vars, int& fresh,
                       int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 2);
  switch (pick(rng)) {
    case 0: return Formula::equals(random_term(rng, vars, 2), random_term(rng, vars, 2));
    case 1: return Formula::relation("E", {random_term(rng, vars, 1), random_term(rng, vars, 1)});
    case 2:
      return Formula::relation("T", {random_term(rng, vars, 1), random_term(rng, vars, 1),
                                     random_term(rng, vars, 1)});
    case 3:
      return Formula::conjunction(random_formula(rng, vars, fresh, depth - 1),
                                  random_formula(rng, vars, fresh, depth - 1));
    case 4:
      return Formula::disjunction(random_formula(rng, vars, fresh, depth - 1),
                                  random_formula(rng, vars, fresh, depth - 1));
    case 5: return Formula::negation(random_formula(rng, vars, fresh, depth - 1));
    default: {
      std::string v = bound_variable(++fresh);
      vars.push_back(v);
      Formula body = random_formula(rng, vars, fresh, depth - 1);
      vars.pop_back();
      return rng() % 2 ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
    }
  }
}

}  // namespace

TEST_CASE("two-path formula parses to the expected tree") {
  Formula f = parse_formula("exists z1 . x E z1 & z1 E y", graph_sig());
  REQUIRE(f.kind == Formula::Kind::Exists);
  CHECK(f.symbol == "z1");
  const Formula& body = f.children[0];
  REQUIRE(body.kind == Formula::Kind::And);
  CHECK(body.children[0] == Formula::relation("E", {Term::variable("x"), Term::variable("z1")}));
  CHECK(body.children[1] == Formula::relation("E", {Term::variable("z1"), Term::variable("y")}));
  CHECK(free_variables(f) == std::set<std::string>{"x", "y"});
  CHECK(is_conjunctive(f));
  CHECK(is_connected_formula(f));
}

TEST_CASE("smallest two-formula") {
  Formula f = parse_formula("x = y", Signature{});
  CHECK(f == Formula::equals(Term::variable("x"), Term::variable("y")));
  CHECK(rank(f) == 2);
  CHECK(is_connected_formula(f));
}

TEST_CASE("parser rejections") {
  Signature s = mixed_sig();
  CHECK_THROWS_AS(parse_formula("forall x . P(x) & exists x . R(x)", s), ParseError);
  CHECK_NOTHROW(parse_formula("exists z . x = z & z = y", s));
  CHECK_THROWS_AS(parse_formula("x = y & (exists x . P(x))", s), ParseError);  // also free
  CHECK_THROWS_AS(parse_formula("h(x) = y", s), ParseError);                   // undeclared
  CHECK_THROWS_AS(parse_formula("f(x, y) = y", s), ParseError);                // arity
  CHECK_THROWS_AS(parse_formula("x Q y", s), ParseError);
  CHECK_THROWS_AS(parse_formula("x = ", s), ParseError);
  CHECK_THROWS_AS(parse_formula("x = y)", s), ParseError);
  CHECK_THROWS_AS(parse_formula("x $ y", s), ParseError);
  CHECK_THROWS_AS(parse_formula("T x y", s), ParseError);
  try {
    parse_formula("x = y & f(x, y) = y", s);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("precedence and printing") {
  Signature s = mixed_sig();
  Formula f = parse_formula("P(x) | R(y) & x E y", s);
  REQUIRE(f.kind == Formula::Kind::Or);
  CHECK(f.children[1].kind == Formula::Kind::And);
  Formula q = parse_formula("exists z1 . x E z1 & z1 E y | x = y", s);
  REQUIRE(q.kind == Formula::Kind::Exists);  // quantifier scope extends right
  CHECK(to_string(parse_formula("!x = y & T(x, y, c0)", s)) == "!(x = y) & T(x,y,c0)");
  CHECK(to_string(parse_formula("x = g(f(x), c0)", s)) == "x = g(f(x),c0)");
}

TEST_CASE("free variables") {
  Signature s = mixed_sig();
  CHECK(free_variables(parse_formula("x = y", s)) == std::set<std::string>{"x", "y"});
  CHECK(free_variables(parse_formula("forall z . x = z", s)) == std::set<std::string>{"x"});
  CHECK(rank(parse_formula("forall z . x = z", s)) == 1);
  CHECK(variables(parse_formula("forall z . x = x", s)) == std::set<std::string>{"x", "z"});
}

TEST_CASE("conjunctive check") {
  Signature s = mixed_sig();
  CHECK(is_conjunctive(parse_formula("exists z1 . x E z1 & z1 E y", s)));
  CHECK_FALSE(is_conjunctive(parse_formula("x = y | x = x", s)));
  CHECK_FALSE(is_conjunctive(parse_formula("!(x = y)", s)));
}

TEST_CASE("dependency graphs") {
  Signature s = mixed_sig();
  auto g = dependency_graph(parse_formula("exists w . exists z . x = y & w = z", s));
  CHECK(g.vertices == std::set<std::string>{"w", "x", "y", "z"});
  CHECK(g.components().size() == 2);
  CHECK_FALSE(is_connected_formula(parse_formula("exists w . exists z . x = y & w = z", s)));

  auto h = dependency_graph(parse_formula("f(x) = f(y)", s));
  CHECK(h.edges.size() == 1);
  CHECK(h.has_edge("y", "x"));

  auto p = dependency_graph(parse_formula("exists z1 . x E z1 & z1 E y", s));
  CHECK(p.has_edge("x", "z1"));
  CHECK(p.has_edge("z1", "y"));
  CHECK_FALSE(p.has_edge("x", "y"));
  CHECK(p.connected());

  CHECK(is_connected_formula(parse_formula("x = y", s)));
  CHECK_FALSE(is_connected_formula(parse_formula("x = c0 & y = c0", s)));
  DependencyOptions with_constants{true};
  CHECK(is_connected_formula(parse_formula("x = c0 & y = c0", s), with_constants));

  CHECK_THROWS_AS(dependency_graph(parse_formula("x = y | x = x", s)), std::invalid_argument);
  CHECK_FALSE(is_connected_formula(parse_formula("x = y | x = x", s)));
  CHECK_FALSE(is_connected_formula(parse_formula("forall z . x = z", s)));
}

TEST_CASE("round trip on random formulas") {
  Signature s = mixed_sig();
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    std::seed_seq seq{std::uint64_t{7}, trial};
    std::mt19937_64 rng(seq);
    std::vector<std::string> vars{"x", "y"};
    int fresh = 0;
    Formula f = random_formula(rng, vars, fresh, 4);
    std::string text = to_string(f);
    INFO(text);
    Formula g = parse_formula(text, s);
    CHECK(g == f);
    if (is_connected_formula(f)) {
      CHECK(is_conjunctive(f));
      CHECK(free_variables(f).count("x"));
      CHECK(free_variables(f).count("y"));
    }
    if (is_conjunctive(f)) CHECK(dependency_graph(f).vertices == variables(f));
  }
}
