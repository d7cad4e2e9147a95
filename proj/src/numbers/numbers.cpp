#include "anaprop/numbers.hpp"

#include <stdexcept>

namespace anaprop {

namespace {

void require_natural(std::initializer_list<std::int64_t> xs) {
  for (auto x : xs)
    if (x < 0) throw std::invalid_argument("natural numbers only, got " + std::to_string(x));
}

Term iterate(const std::string& succ, std::int64_t k, Term t) {
  for (std::int64_t i = 0; i < k; ++i) t = Term::apply(succ, {std::move(t)});
  return t;
}

}  // namespace

EJustDescriptor e_type(std::int64_t a, std::int64_t b) {
  require_natural({a, b});
  return {b - a};
}

bool e_member(const EJustDescriptor& desc, std::int64_t k, std::int64_t l) {
  require_natural({k, l});
  return k - l == desc.delta;
}

std::optional<EJustDescriptor> e_intersect(const EJustDescriptor& p, const EJustDescriptor& q) {
  if (p.delta == q.delta) return p;
  return std::nullopt;
}

std::pair<std::int64_t, std::int64_t> e_witness_exponents(const EJustDescriptor& desc,
                                                          std::int64_t m) {
  require_natural({m});
  if (desc.delta >= 0) return {desc.delta + m, m};
  return {m, m - desc.delta};
}

Formula e_witness(const EJustDescriptor& desc, std::int64_t m, const std::string& succ) {
  auto [k, l] = e_witness_exponents(desc, m);
  return Formula::equals(iterate(succ, k, Term::variable(kVarX)),
                         iterate(succ, l, Term::variable(kVarY)));
}

std::string e_family(const EJustDescriptor& desc) {
  if (desc.delta >= 0)
    return "S^(" + std::to_string(desc.delta) + "+m)(x) = S^m(y), m >= 0";
  return "S^m(x) = S^(" + std::to_string(-desc.delta) + "+m)(y), m >= 0";
}

// The type of every arrow is non-empty and contains no trivial member, so
// case (a) never applies. The shared set is non-empty iff the deltas agree,
// and then the only target d' with a non-empty shared set is c + delta.
EArrowVerdict e_arrow_holds(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  require_natural({a, b, c, d});
  EArrowVerdict v;
  const auto src = e_type(a, b);
  v.shared = e_intersect(src, e_type(c, d));
  if (!v.shared) {
    if (c + src.delta >= 0) v.blocking = c + src.delta;
    return v;
  }
  // J(d') = src ∩ type(c,d') is non-empty only for d' = c + delta = d.
  v.holds = true;
  return v;
}

EProportion e_proportion_report(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  EProportion p;
  p.arrows[0] = e_arrow_holds(a, b, c, d);
  p.arrows[1] = e_arrow_holds(b, a, d, c);
  p.arrows[2] = e_arrow_holds(c, d, a, b);
  p.arrows[3] = e_arrow_holds(d, c, b, a);
  p.holds = p.arrows[0].holds && p.arrows[1].holds && p.arrows[2].holds && p.arrows[3].holds;
  return p;
}

bool e_proportion(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return e_proportion_report(a, b, c, d).holds;
}

}  // namespace anaprop
