#include "doctest.h"

#include "anaprop/parser.hpp"
#include "anaprop/proportion.hpp"

using namespace anaprop;

namespace {

FiniteStructure set_of(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return FiniteStructure("A", Signature{}, names);
}

FiniteStructure collapse() {
  return parse_structures(
      "structure S { universe: a b  function f/1 { (a) -> b, (b) -> b } }")[0];
}

FiniteStructure z5() {
  Signature sig;
  sig.add_function("add", 2);
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) names.push_back(std::to_string(i));
  FiniteStructure s("Z5", sig, names);
  for (Element u = 0; u < 5; ++u)
    for (Element v = 0; v < 5; ++v) s.set_function("add", {u, v}, (u + v) % 5);
  return s;
}

Term plus() { return Term::apply("add", {Term::variable("x"), Term::variable("y")}); }

}  // namespace

TEST_CASE("arrows in a bare set") {
  auto a = set_of(3);
  auto idx = build_index(a, a, FragmentSpec::cformula());
  auto v = arrow_holds(idx, 0, 1, 1, 2);
  CHECK(v.holds);
  CHECK(v.mode == Mode::AllTrivial);
  CHECK(v.shared.empty());

  auto w = arrow_holds(idx, 0, 0, 1, 2);
  CHECK_FALSE(w.holds);
  CHECK(w.mode == Mode::Blocked);
  REQUIRE(w.blocking);
  CHECK(w.blocking->d_prime == 2);
  CHECK(to_string(idx.formulas[w.blocking->formula]) == "x = y");

  for (Element c = 0; c < 3; ++c) {
    auto r = arrow_holds(idx, 1, 1, c, c);
    CHECK(r.holds);
    CHECK(r.mode == Mode::Maximal);
    REQUIRE(r.shared.size() == 1);
    CHECK(to_string(idx.formulas[r.shared[0]]) == "x = y");
  }
}

TEST_CASE("proportions in a bare set") {
  auto a = set_of(3);
  CHECK(proportion_holds(a, a, 0, 1, 1, 2).holds);
  auto p = proportion_holds(a, a, 0, 0, 1, 2);
  CHECK_FALSE(p.holds);
  CHECK(p.mode() == Mode::Blocked);
}

TEST_CASE("p-commutativity fails in the collapsing structure") {
  auto c = collapse();
  auto p = proportion_holds(c, c, 0, 1, 1, 0);
  CHECK_FALSE(p.holds);
  CHECK(p.mode() == Mode::Blocked);
}

TEST_CASE("characteristic justifications") {
  auto a = set_of(3);
  auto idx = build_index(a, a, FragmentSpec::cformula(Bounds{1, 0, 0, true, true, true}));
  REQUIRE(to_string(idx.formulas[0]) == "x = y");
  CHECK(is_characteristic(idx, {0}, 1, 1, 2, 2));
  CHECK_FALSE(is_characteristic(idx, {0}, 1, 1, 2, 0));
  CHECK_FALSE(is_characteristic(idx, {}, 0, 1, 1, 2));
}

TEST_CASE("bounds are reported") {
  auto a = set_of(2);
  Bounds b{1, 0, 0, true, false, true};
  auto p = proportion_holds(a, a, 0, 0, 1, 1, FragmentSpec::cformula(b));
  CHECK(p.bounds == b);
  CHECK(p.arrows[2].bounds == b);
  CHECK(to_string(b).find("atoms=1") != std::string::npos);
}

TEST_CASE("unknown elements are reported") {
  auto a = set_of(2);
  auto idx = build_index(a, a, FragmentSpec::cformula());
  CHECK_THROWS_AS(arrow_holds(idx, 0, 5, 0, 0), UnknownElementError);
  CHECK_THROWS_AS(proportion_holds(idx, 0, 0, 0, 9), UnknownElementError);
}

TEST_CASE("EPT single arrow over Z5") {
  auto s = z5();
  CHECK(ept_check(s, plus(), 1, 2, 3, 0));
  CHECK_FALSE(ept_check(s, plus(), 1, 2, 3, 1));
  auto r = ept_report(s, plus(), 1, 2, 3, 0);
  CHECK(r.hypothesis);
  CHECK(r.characteristic);
  CHECK(to_string(r.justification) == "add(x,y) = @3");

  // A constant term never pins d.
  Signature sig;
  sig.add_function("k", 2);
  FiniteStructure konst("K", sig, {"a", "b"});
  for (Element u = 0; u < 2; ++u)
    for (Element v = 0; v < 2; ++v) konst.set_function("k", {u, v}, 0);
  auto t = Term::apply("k", {Term::variable("x"), Term::variable("y")});
  for (Element d = 0; d < 2; ++d) CHECK_FALSE(ept_check(konst, t, 0, 1, 1, d));

  CHECK_THROWS_AS(ept_check(s, Term::variable("x"), 0, 0, 0, 0), TermError);
}

TEST_CASE("EPT full instance over Z5") {
  auto s = z5();
  auto t = plus();
  auto inst = ept_full_instance(s, t, t, t, t, 1, 2, 3, 0);
  CHECK(inst.hypothesis);
  CHECK(inst.justifications.size() == 4);
  CHECK(inst.expanded.signature().constants().size() == 4);
  CHECK_FALSE(ept_full_check(s, t, t, t, t, 1, 2, 3, 1));
  CHECK(ept_full_check(s, t, t, t, t, 2, 2, 2, 2));

  IndexOptions opts;
  opts.extras = inst.justifications;
  auto p = proportion_holds(inst.expanded, inst.expanded, 1, 2, 3, 0,
                            FragmentSpec::cformula(Bounds{2, 1, 1, true, true, true}), opts);
  CHECK(p.holds);
}
