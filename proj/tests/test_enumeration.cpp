#include "doctest.h"

#include <algorithm>
#include <random>

#include "anaprop/index.hpp"
#include "anaprop/parser.hpp"

using namespace anaprop;

namespace {

std::set<std::string> printed(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(to_string(f));
  return out;
}

Signature unary_f() {
  Signature s;
  s.add_function("f", 1);
  return s;
}

FiniteStructure collapse() {
  return parse_structures(
      "structure S { universe: a b  function f/1 { (a) -> b, (b) -> b } }")[0];
}

FiniteStructure random_unary(std::mt19937_64& rng, std::size_t n, int functions) {
  Signature sig;
  for (int i = 0; i < functions; ++i) sig.add_function("f" + std::to_string(i), 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  FiniteStructure s("R", sig, names);
  for (int i = 0; i < functions; ++i)
    for (Element e = 0; e < n; ++e) s.set_function("f" + std::to_string(i), {e}, rng() % n);
  return s;
}

}  // namespace

TEST_CASE("single atoms over one unary function") {
  auto fs = enumerate_cformulas(unary_f(), Bounds{1, 1, 0, true, true, true});
  CHECK(printed(fs) ==
        std::set<std::string>{"x = y", "f(x) = y", "x = f(y)", "f(x) = f(y)"});
  CHECK(fs.size() == 4);
}

TEST_CASE("empty signature") {
  CHECK(printed(enumerate_cformulas(Signature{}, Bounds{1, 0, 0, true, true, true})) ==
        std::set<std::string>{"x = y"});
  // Bound variables add nothing new beyond chains of equalities.
  for (const auto& f : enumerate_cformulas(Signature{}, Bounds{2, 0, 1, true, true, true})) {
    CHECK(is_connected_formula(f));
    CHECK(rank(f) == 2);
  }
}

TEST_CASE("two-path formula is enumerated") {
  Signature g;
  g.add_relation("E", 2);
  auto fs = printed(enumerate_cformulas(g, Bounds{2, 0, 1, true, false, true}));
  CHECK(fs.count("exists z1 . x E z1 & z1 E y"));
  CHECK(fs.count("x E y"));
  CHECK(fs.count("y E x"));
  for (const auto& s : fs) CHECK(s.find("forall") == std::string::npos);
  CHECK(to_string(path_formula(2, "E")) == "exists z1 . x E z1 & z1 E y");
  CHECK(to_string(path_formula(0, "E")) == "x = y");
}

TEST_CASE("every candidate is within bounds and connected") {
  Signature s;
  s.add_function("f", 1).add_function("g", 2).add_relation("E", 2).add_constant("k");
  s.add_constant("@p", true);
  Bounds b{2, 1, 1, true, true, true};
  auto fs = enumerate_cformulas(s, b);
  CHECK(!fs.empty());
  std::set<std::string> seen;
  for (const auto& f : fs) {
    INFO(to_string(f));
    CHECK(is_connected_formula(f));
    CHECK(is_two_formula(f));
    CHECK(atom_count(f) <= b.max_atoms);
    CHECK(max_term_depth(f) <= b.max_term_depth);
    CHECK(quantifier_count(f) <= b.max_quantifiers);
    CHECK(constants(f).count("@p") == 0);
    CHECK(seen.insert(to_string(f)).second);
  }
  Bounds no_const = b;
  no_const.allow_constants = false;
  for (const auto& f : enumerate_cformulas(s, no_const)) CHECK(constants(f).empty());
}

TEST_CASE("enumeration is monotone in the bounds and deterministic") {
  Signature s;
  s.add_function("f", 1).add_relation("E", 2);
  auto small = enumerate_cformulas(s, Bounds{1, 1, 1, true, true, true});
  auto large = enumerate_cformulas(s, Bounds{2, 1, 1, true, true, true});
  auto again = enumerate_cformulas(s, Bounds{2, 1, 1, true, true, true});
  CHECK(printed(large) == printed(again));
  CHECK(large == again);
  auto big = printed(large);
  for (const auto& f : small) CHECK(big.count(to_string(f)));
  auto exists_only = printed(enumerate_cformulas(s, Bounds{2, 1, 1, true, false, true}));
  for (const auto& f : exists_only) CHECK(big.count(f));
}

TEST_CASE("equational fragment") {
  Signature s;
  s.add_function("f", 1).add_relation("E", 2);
  auto set = enumerate_candidates(s, FragmentSpec::equational(Bounds{3, 2, 2, true, true, true}));
  for (const auto& c : set.candidates()) {
    Formula f = set.formula(c);
    CHECK(f.kind == Formula::Kind::Equality);
  }
  CHECK(set.size() > 4);
  CHECK_THROWS(enumerate_candidates(s, FragmentSpec::path()));
}

TEST_CASE("table evaluator matches direct extension") {
  for (std::uint64_t trial = 0; trial < 25; ++trial) {
    std::seed_seq seq{std::uint64_t{3}, trial};
    std::mt19937_64 rng(seq);
    Signature sig;
    sig.add_function("f", 1).add_relation("E", 2);
    std::size_t n = 1 + trial % 4;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    FiniteStructure s("R", sig, names);
    for (Element e = 0; e < n; ++e) {
      s.set_function("f", {e}, rng() % n);
      for (Element u = 0; u < n; ++u)
        if (rng() % 2) s.add_tuple("E", {e, u});
    }
    auto set = enumerate_candidates(sig, FragmentSpec::cformula(Bounds{2, 1, 2, true, true, true}));
    TableEvaluator ev(s, set);
    for (const auto& c : set.candidates()) {
      Formula f = set.formula(c);
      INFO(to_string(f));
      CHECK(ev.extension(c) == extension(s, f));
    }
  }
}

TEST_CASE("trivial justifications") {
  FiniteStructure one("O", Signature{}, {"a"});
  auto idx = build_index(one, one, FragmentSpec::cformula(Bounds{1, 0, 0, true, true, true}));
  REQUIRE(idx.size() == 1);
  CHECK(idx.trivial.test(0));

  auto c = collapse();
  auto ic = build_index(c, c, FragmentSpec::cformula(Bounds{1, 1, 0, true, true, true}),
                        IndexOptions{false, {}, {}});
  for (std::size_t i = 0; i < ic.size(); ++i)
    CHECK(ic.trivial.test(i) == (to_string(ic.formulas[i]) == "f(x) = f(y)"));

  FiniteStructure three("T", Signature{}, {"1", "2", "3"});
  auto it = build_index(three, three, FragmentSpec::cformula(Bounds{1, 0, 0, true, true, true}));
  CHECK_FALSE(it.trivial.test(0));
}

TEST_CASE("justification types") {
  FiniteStructure three("T", Signature{}, {"1", "2", "3"});
  auto idx = build_index(three, three, FragmentSpec::cformula());
  auto t11 = justification_type(idx, Side::A, 0, 0);
  std::vector<std::string> names;
  for (auto i : t11)
    if (!idx.trivial.test(i)) names.push_back(to_string(idx.formulas[i]));
  CHECK(names == std::vector<std::string>{"x = y"});
  for (auto i : justification_type(idx, Side::A, 0, 1)) CHECK(idx.trivial.test(i));

  auto c = collapse();
  auto ic = build_index(c, c, FragmentSpec::cformula(), IndexOptions{false, {}, {}});
  bool found = false;
  for (auto i : justification_type(ic, Side::A, 0, 1))
    found = found || to_string(ic.formulas[i]) == "f(x) = y";
  CHECK(found);
  CHECK_THROWS_AS(ic.type_bits(Side::B, 0, 7), UnknownElementError);
}

TEST_CASE("triviality agrees with brute force; types agree with satisfaction") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    std::seed_seq seq{std::uint64_t{9}, trial};
    std::mt19937_64 rng(seq);
    auto a = random_unary(rng, 1 + trial % 4, 1 + trial % 2);
    auto b = random_unary(rng, 1 + (trial / 2) % 4, 1 + trial % 2);
    auto idx = build_index(a, b, FragmentSpec::cformula(), IndexOptions{false, {}, {}});
    for (std::size_t i = 0; i < idx.size(); ++i) {
      bool all = true;
      for (const auto* s : {&a, &b})
        for (Element u = 0; u < s->size(); ++u)
          for (Element v = 0; v < s->size(); ++v)
            all = all && satisfies(*s, idx.formulas[i], {{"x", u}, {"y", v}});
      CHECK(idx.trivial.test(i) == all);
      for (Element u = 0; u < b.size(); ++u)
        for (Element v = 0; v < b.size(); ++v)
          CHECK(idx.type_bits(Side::B, u, v).test(i) ==
                satisfies(b, idx.formulas[i], {{"x", u}, {"y", v}}));
    }
    // Collapse keeps exactly one formula per extension pair.
    auto col = build_index(a, b, FragmentSpec::cformula());
    std::set<std::pair<std::string, std::string>> keys;
    for (std::size_t i = 0; i < col.size(); ++i) {
      std::string ka, kb;
      boost::to_string(col.ext_a[i].bits(), ka);
      boost::to_string(col.ext_b[i].bits(), kb);
      CHECK(keys.insert({ka, kb}).second);
    }
    std::set<std::pair<std::string, std::string>> full;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      std::string ka, kb;
      boost::to_string(idx.ext_a[i].bits(), ka);
      boost::to_string(idx.ext_b[i].bits(), kb);
      full.insert({ka, kb});
    }
    CHECK(keys == full);
  }
}

TEST_CASE("path fragment index") {
  auto g = parse_structures("graph G { universe: a b c d  relation E/2 { (a,c) } }")[0];
  auto idx = build_index(g, g, FragmentSpec::path(), IndexOptions{false, {}, {}});
  CHECK(idx.size() == 10);  // pi_0 .. pi_9
  CHECK(build_index(g, g, FragmentSpec::path()).size() == 3);
  CHECK(to_string(idx.formulas[1]) == "x E y");
  Signature two;
  two.add_function("f", 1);
  FiniteStructure s("S", two, {"a"});
  s.set_function("f", {0}, 0);
  CHECK_THROWS_AS(build_index(s, s, FragmentSpec::path()), SignatureError);
}
