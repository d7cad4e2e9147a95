#include "anaprop/proportion.hpp"

namespace anaprop {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::AllTrivial: return "allTrivial";
    case Mode::Maximal: return "maximal";
    case Mode::Blocked: return "blocked";
  }
  return "?";
}

Verdict arrow_holds(const JustificationIndex& idx, Element a, Element b, Element c, Element d,
                    Direction dir) {
  const Side src = dir == Direction::Forward ? Side::A : Side::B;
  const Side tgt = dir == Direction::Forward ? Side::B : Side::A;
  const auto& ts = idx.type_bits(src, a, b);
  const auto& td = idx.type_bits(tgt, c, d);
  const boost::dynamic_bitset<> nontrivial = ~idx.trivial;

  Verdict v;
  v.bounds = idx.fragment.bounds;
  const auto shared = ts & td & nontrivial;
  for (auto i = shared.find_first(); i != shared.npos; i = shared.find_next(i))
    v.shared.push_back(i);

  const auto uni = (ts | td) & nontrivial;
  if (uni.none()) {
    v.holds = true;
    v.mode = Mode::AllTrivial;
    return v;
  }
  v.mode = Mode::Blocked;
  if (shared.none()) {
    v.blocking = BlockingWitness{d, uni.find_first()};
    return v;
  }
  for (Element dp = 0; dp < idx.universe_size(tgt); ++dp) {
    if (dp == d) continue;
    const auto other = ts & idx.type_bits(tgt, c, dp) & nontrivial;
    if (shared.is_subset_of(other) && !other.is_subset_of(shared)) {
      v.blocking = BlockingWitness{dp, (other - shared).find_first()};
      return v;
    }
  }
  v.holds = true;
  v.mode = Mode::Maximal;
  return v;
}

Mode ProportionVerdict::mode() const {
  bool maximal = false;
  for (const auto& a : arrows) {
    if (!a.holds) return a.mode;
    maximal = maximal || a.mode == Mode::Maximal;
  }
  return maximal ? Mode::Maximal : Mode::AllTrivial;
}

ProportionVerdict proportion_holds(const JustificationIndex& idx, Element a, Element b, Element c,
                                   Element d) {
  ProportionVerdict p;
  p.bounds = idx.fragment.bounds;
  p.arrows[0] = arrow_holds(idx, a, b, c, d, Direction::Forward);
  p.arrows[1] = arrow_holds(idx, b, a, d, c, Direction::Forward);
  p.arrows[2] = arrow_holds(idx, c, d, a, b, Direction::Backward);
  p.arrows[3] = arrow_holds(idx, d, c, b, a, Direction::Backward);
  p.holds = p.arrows[0].holds && p.arrows[1].holds && p.arrows[2].holds && p.arrows[3].holds;
  return p;
}

ProportionVerdict proportion_holds(const FiniteStructure& A, const FiniteStructure& B, Element a,
                                   Element b, Element c, Element d, const FragmentSpec& frag,
                                   const IndexOptions& opts) {
  return proportion_holds(build_index(A, B, frag, opts), a, b, c, d);
}

bool is_characteristic(const JustificationIndex& idx, const std::vector<std::size_t>& j, Element a,
                       Element b, Element c, Element d, Direction dir) {
  const Side src = dir == Direction::Forward ? Side::A : Side::B;
  const Side tgt = dir == Direction::Forward ? Side::B : Side::A;
  boost::dynamic_bitset<> want(idx.size());
  for (auto i : j) want.set(i);
  const auto& ts = idx.type_bits(src, a, b);
  if (!want.is_subset_of(ts & idx.type_bits(tgt, c, d))) return false;
  for (Element dp = 0; dp < idx.universe_size(tgt); ++dp)
    if (dp != d && want.is_subset_of(ts & idx.type_bits(tgt, c, dp))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Equational hypotheses

namespace {

void check_c_term(const FiniteStructure& s, const Term& t) {
  if (!is_c_term(t)) throw TermError("'" + to_string(t) + "' is not a term in both x and y");
  try {
    term_value(s, t, 0, 0);
  } catch (const EvaluationError& e) {
    throw TermError(e.what());
  }
}

Term swap_xy(const Term& t) {
  if (t.kind == Term::Kind::Variable) {
    if (t.symbol == kVarX) return Term::variable(kVarY);
    if (t.symbol == kVarY) return Term::variable(kVarX);
    return t;
  }
  Term out = t;
  for (auto& a : out.args) a = swap_xy(a);
  return out;
}

std::string fresh_parameter(const Signature& sig, const std::string& base) {
  std::string name = "@" + base;
  for (int i = 2; sig.kind_of(name); ++i) name = "@" + base + "_" + std::to_string(i);
  return name;
}

}  // namespace

Element term_value(const FiniteStructure& s, const Term& t, Element u, Element v) {
  return evaluate_term(s, t, Assignment{{kVarX, u}, {kVarY, v}});
}

EptReport ept_report(const FiniteStructure& s, const Term& t, Element a, Element b, Element c,
                     Element d) {
  check_c_term(s, t);
  for (Element e : {a, b, c, d})
    if (e >= s.size()) throw UnknownElementError("#" + std::to_string(e));
  EptReport r;
  const Element v = term_value(s, t, a, b);
  r.hypothesis = term_value(s, t, c, d) == v;
  for (Element dp = 0; dp < s.size() && r.hypothesis; ++dp)
    if (dp != d && term_value(s, t, c, dp) == v) r.hypothesis = false;

  const std::string p = fresh_parameter(s.signature(), s.element_name(v));
  FiniteStructure expanded = s.with_parameter(p, v);
  r.justification = Formula::equals(t, Term::constant(p));
  FragmentSpec none = FragmentSpec::cformula(Bounds{0, 0, 0, false, false, false});
  IndexOptions opts;
  opts.extras = {r.justification};
  auto idx = build_index(expanded, expanded, none, opts);
  r.characteristic = is_characteristic(idx, {0}, a, b, c, d);
  return r;
}

bool ept_check(const FiniteStructure& s, const Term& t, Element a, Element b, Element c,
               Element d) {
  auto r = ept_report(s, t, a, b, c, d);
  return r.hypothesis && r.characteristic;
}

EptInstance ept_full_instance(const FiniteStructure& s, const Term& ta, const Term& tb,
                              const Term& tc, const Term& td, Element a, Element b, Element c,
                              Element d) {
  for (const Term* t : {&ta, &tb, &tc, &td}) check_c_term(s, *t);
  for (Element e : {a, b, c, d})
    if (e >= s.size()) throw UnknownElementError("#" + std::to_string(e));
  const auto n = s.size();
  auto val = [&](const Term& t, Element u, Element v) { return term_value(s, t, u, v); };

  const Element vd = val(td, a, b), vc = val(tc, a, b), vb = val(tb, c, d), va = val(ta, c, d);
  bool hyp = val(td, c, d) == vd && val(tc, c, d) == vc && val(tb, a, b) == vb &&
             val(ta, a, b) == va;
  for (Element e = 0; e < n && hyp; ++e) {
    if (e != d && val(td, c, e) == vd) hyp = false;
    if (e != c && val(tc, e, d) == vc) hyp = false;
    if (e != b && val(tb, a, e) == vb) hyp = false;
    if (e != a && val(ta, e, b) == va) hyp = false;
  }

  FiniteStructure expanded = s;
  std::vector<Formula> js;
  auto add = [&](const std::string& role, const Term& t, Element v) {
    std::string p = fresh_parameter(expanded.signature(), role);
    expanded = expanded.with_parameter(p, v);
    js.push_back(Formula::equals(t, Term::constant(p)));
  };
  add("td", td, vd);
  add("tc", swap_xy(tc), vc);
  add("tb", tb, vb);
  add("ta", swap_xy(ta), va);
  return EptInstance{hyp, std::move(expanded), std::move(js)};
}

bool ept_full_check(const FiniteStructure& s, const Term& ta, const Term& tb, const Term& tc,
                    const Term& td, Element a, Element b, Element c, Element d) {
  return ept_full_instance(s, ta, tb, tc, td, a, b, c, d).hypothesis;
}

}  // namespace anaprop
