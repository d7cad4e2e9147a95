#include "anaprop/harness.hpp"
#include "anaprop/structure.hpp"

namespace anaprop::harness {

namespace {

FiniteStructure parse_one(const char* text) { return parse_structures(text).at(0); }

CatalogClaim claim(const std::string& a, const std::string& b, const std::string& c,
                   const std::string& d, bool expected, std::size_t source = 0,
                   std::size_t target = 0) {
  return CatalogClaim{source, target, {a, b, c, d}, expected};
}

// Smallest bounds at which every claim of the entry reproduces, found with
// bounds_sweep over atoms 1..3, depth 0..2, quantifiers 0..2 (settings with
// more than 300000 candidates skipped).
Bounds frozen(int atoms, int depth, int quantifiers) {
  return Bounds{atoms, depth, quantifiers, true, true, true};
}

// No swept setting reproduces all claims of the two transitivity entries
// below: with depth 0 the conclusion holds, with depth >= 1 one premise is
// blocked by a fixed point of g and h. They stay at the default bounds.
const Bounds kUnreproduced{};

}  // namespace

std::vector<CatalogEntry> general_catalog() {
  std::vector<CatalogEntry> out;

  out.push_back({"strong inner p-reflexivity", "general",
                 {parse_one(R"(structure A {
                    universe: a c d
                    function f/1 { (a) -> a, (c) -> d, (d) -> c }
                  })")},
                 FragmentSpec::cformula(frozen(1, 1, 0)),
                 {claim("a", "a", "c", "d", true)}});

  out.push_back({"central permutation", "general",
                 {parse_one("structure A { universe: a b c }")},
                 FragmentSpec::cformula(frozen(1, 0, 0)),
                 {claim("a", "b", "a", "c", true), claim("a", "a", "b", "c", false)}});

  out.push_back({"central permutation (edge a-c)", "general",
                 {parse_one("structure A graph { universe: a b c d  relation E/2 { (a,c) } }")},
                 FragmentSpec::cformula(frozen(1, 0, 0)),
                 {claim("a", "b", "c", "d", true), claim("a", "c", "b", "d", false)}});

  out.push_back({"strong p-reflexivity", "general",
                 {parse_one("structure A { universe: a b d }")},
                 FragmentSpec::cformula(frozen(1, 0, 0)),
                 {claim("a", "b", "a", "d", true)}});

  out.push_back({"p-commutativity", "general",
                 {parse_one(R"(structure A {
                    universe: a b
                    function f/1 { (a) -> b, (b) -> b }
                  })")},
                 FragmentSpec::cformula(frozen(1, 1, 0)),
                 {claim("a", "b", "b", "a", false)}});

  out.push_back({"p-transitivity", "general",
                 {parse_one(R"(structure A {
                    universe: a b c d e f
                    function g/1 { (a) -> b, (b) -> b, (c) -> d, (d) -> d, (e) -> e, (f) -> f }
                    function h/1 { (a) -> a, (b) -> b, (c) -> d, (d) -> d, (e) -> f, (f) -> f }
                  })")},
                 FragmentSpec::cformula(kUnreproduced),
                 {claim("a", "b", "c", "d", true), claim("c", "d", "e", "f", true),
                  claim("a", "b", "e", "f", false)}});

  out.push_back({"inner p-transitivity", "general",
                 {parse_one(R"(structure A {
                    universe: a b c d e f
                    function g/1 { (a) -> e, (b) -> b, (c) -> c, (d) -> d, (e) -> e, (f) -> f }
                  })")},
                 FragmentSpec::cformula(frozen(1, 1, 0)),
                 {claim("a", "b", "c", "d", true), claim("b", "e", "d", "f", true),
                  claim("a", "e", "c", "f", false)}});

  out.push_back({"central p-transitivity", "general",
                 {parse_one(R"(structure A {
                    universe: a b c d
                    function g/1 { (a) -> b, (b) -> c, (c) -> c, (d) -> d }
                    function h/1 { (a) -> a, (b) -> c, (c) -> d, (d) -> d }
                  })")},
                 FragmentSpec::cformula(kUnreproduced),
                 {claim("a", "b", "b", "c", true), claim("b", "c", "c", "d", true),
                  claim("a", "b", "c", "d", false)}});
  return out;
}

// Drawings with several components are read as one graph per component
// group, matching the number of structures in the property.
std::vector<CatalogEntry> graph_catalog() {
  std::vector<CatalogEntry> out;
  const auto path = FragmentSpec::path();

  out.push_back({"central permutation", "graphs",
                 {parse_one("graph G { universe: a b c d  relation E/2 { (a,c) } }")},
                 path,
                 {claim("a", "b", "c", "d", true), claim("a", "c", "b", "d", false)}});

  out.push_back({"strong inner p-reflexivity", "graphs",
                 {parse_one("graph G { universe: a c d  relation E/2 { (a,a), (c,d) } }")},
                 path,
                 {claim("a", "a", "c", "d", true)}});

  out.push_back({"strong p-reflexivity", "graphs",
                 {parse_one("graph G { universe: a b d }")},
                 path,
                 {claim("a", "b", "a", "d", true)}});

  out.push_back({"p-transitivity", "graphs",
                 {parse_one("graph A { universe: a b  relation E/2 { (a,b) } }"),
                  parse_one("graph B { universe: c s d  relation E/2 { (c,s), (s,d), (d,c) } }"),
                  parse_one("graph C { universe: e s f  relation E/2 { (e,s), (s,f) } }")},
                 path,
                 {claim("a", "b", "c", "d", true, 0, 1), claim("c", "d", "e", "f", true, 1, 2),
                  claim("a", "b", "e", "f", false, 0, 2)}});

  out.push_back({"inner p-transitivity", "graphs",
                 {parse_one("graph A { universe: a b e  relation E/2 { (a,e) } }"),
                  parse_one("graph B { universe: c d f }")},
                 path,
                 {claim("a", "b", "c", "d", true, 0, 1), claim("b", "e", "d", "f", true, 0, 1),
                  claim("a", "e", "c", "f", false, 0, 1)}});

  out.push_back({"central p-transitivity", "graphs",
                 {parse_one("graph A { universe: a b  relation E/2 { (a,b) } }"),
                  parse_one("graph B { universe: b s c  relation E/2 { (b,s), (s,c), (c,b) } }"),
                  parse_one("graph C { universe: c s d  relation E/2 { (c,s), (s,d) } }")},
                 path,
                 {claim("a", "b", "b", "c", true, 0, 1), claim("b", "c", "c", "d", true, 1, 2),
                  claim("a", "b", "c", "d", false, 0, 2)}});

  out.push_back({"p-monotonicity", "graphs",
                 {parse_one("graph F { universe: a b c d }"),
                  parse_one("graph G { universe: a b c d  relation E/2 { (a,b) } }")},
                 path,
                 {claim("a", "b", "c", "d", true, 0, 0), claim("a", "b", "c", "d", false, 1, 1)}});
  return out;
}

std::string describe(const CatalogClaim& c, const CatalogEntry& e) {
  const auto& s = e.structures.at(c.source);
  const auto& t = e.structures.at(c.target);
  std::string where = c.source == c.target ? s.name() : "(" + s.name() + "," + t.name() + ")";
  return where + " |= " + c.args[0] + ":" + c.args[1] + "::" + c.args[2] + ":" + c.args[3];
}

bool evaluate_claim(const CatalogEntry& e, const CatalogClaim& c) {
  return evaluate_claim(e, c, e.fragment);
}

bool evaluate_claim(const CatalogEntry& e, const CatalogClaim& c, const FragmentSpec& frag) {
  const auto& s = e.structures.at(c.source);
  const auto& t = e.structures.at(c.target);
  const Element a = s.element(c.args[0]), b = s.element(c.args[1]);
  const Element cc = t.element(c.args[2]), d = t.element(c.args[3]);
  if (frag.kind == FragmentSpec::Kind::Path) {
    PathContext ctx(UndirectedGraph::from_structure(s), UndirectedGraph::from_structure(t));
    return ctx.proportion(a, b, cc, d).holds;
  }
  return proportion_holds(s, t, a, b, cc, d, frag).holds;
}

}  // namespace anaprop::harness
