#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "anaprop/formula.hpp"

namespace anaprop {

// Equational justifications of an arrow a -> b in (N, S): all
// S^k(x) = S^l(y) with k - l = delta, where delta = b - a.
struct EJustDescriptor {
  std::int64_t delta = 0;

  friend bool operator==(const EJustDescriptor&, const EJustDescriptor&) = default;
};

EJustDescriptor e_type(std::int64_t a, std::int64_t b);
bool e_member(const EJustDescriptor& desc, std::int64_t k, std::int64_t l);
// Descriptors describe either identical or disjoint sets.
std::optional<EJustDescriptor> e_intersect(const EJustDescriptor& p, const EJustDescriptor& q);

// Member m >= 0 of the family: S^(delta+m)(x) = S^m(y) for delta >= 0,
// S^m(x) = S^(m-delta)(y) otherwise.
Formula e_witness(const EJustDescriptor& desc, std::int64_t m, const std::string& succ = "S");
std::pair<std::int64_t, std::int64_t> e_witness_exponents(const EJustDescriptor& desc,
                                                          std::int64_t m);
std::string e_family(const EJustDescriptor& desc);

struct EArrowVerdict {
  bool holds = false;
  std::optional<EJustDescriptor> shared;
  // The competing target with a non-empty shared set, when it is not d.
  std::optional<std::int64_t> blocking;
};

// Decides a -> b :. c -> d over the descriptors, d' ranging over N.
EArrowVerdict e_arrow_holds(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

struct EProportion {
  bool holds = false;
  std::array<EArrowVerdict, 4> arrows;
};

EProportion e_proportion_report(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
bool e_proportion(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

}  // namespace anaprop
