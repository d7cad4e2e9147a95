#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "anaprop/index.hpp"

namespace anaprop {

enum class Mode { AllTrivial, Maximal, Blocked };

std::string to_string(Mode m);

struct BlockingWitness {
  Element d_prime;
  // A non-trivial formula in the type of the competitor (c,d') missing from
  // the shared set, or when nothing is shared, one from the union.
  std::size_t formula;
};

struct Verdict {
  bool holds = false;
  Mode mode = Mode::AllTrivial;
  std::vector<std::size_t> shared;  // non-trivial justifications, index order
  std::optional<BlockingWitness> blocking;
  Bounds bounds;
};

// Forward: source A, target B. Backward: source B, target A (the index of
// (A,B) read as the index of (B,A)).
enum class Direction { Forward, Backward };

// Decides source a -> b :. target c -> d; d' ranges over the target universe.
Verdict arrow_holds(const JustificationIndex& idx, Element a, Element b, Element c, Element d,
                    Direction dir = Direction::Forward);

struct ProportionVerdict {
  bool holds = false;
  // (A,B) a->b :. c->d, (A,B) b->a :. d->c, (B,A) c->d :. a->b, (B,A) d->c :. b->a
  std::array<Verdict, 4> arrows;
  Bounds bounds;
  // Mode of the first failing arrow, or Maximal/AllTrivial when all hold
  // (Maximal if any arrow was decided by maximality).
  Mode mode() const;
};

ProportionVerdict proportion_holds(const JustificationIndex& idx, Element a, Element b, Element c,
                                   Element d);
ProportionVerdict proportion_holds(const FiniteStructure& A, const FiniteStructure& B, Element a,
                                   Element b, Element c, Element d,
                                   const FragmentSpec& frag = {}, const IndexOptions& opts = {});

// J is a set of formula indices.
bool is_characteristic(const JustificationIndex& idx, const std::vector<std::size_t>& j, Element a,
                       Element b, Element c, Element d, Direction dir = Direction::Forward);

// ---------------------------------------------------------------------------
// Equational hypotheses

class TermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Value of the c-term t at x -> u, y -> v.
Element term_value(const FiniteStructure& s, const Term& t, Element u, Element v);

struct EptReport {
  bool hypothesis = false;      // t(a,b) = t(c,d) and t(a,b) != t(c,d') for d' != d
  bool characteristic = false;  // t(x,y) = <t(a,b)> is characteristic in the expanded structure
  Formula justification;        // t(x,y) = <t(a,b)>
};

// Throws TermError unless t is a c-term over the structure's signature.
EptReport ept_report(const FiniteStructure& s, const Term& t, Element a, Element b, Element c,
                     Element d);
// Hypothesis of the single-arrow statement, confirmed by the characteristic check.
bool ept_check(const FiniteStructure& s, const Term& t, Element a, Element b, Element c, Element d);

struct EptInstance {
  bool hypothesis = false;
  // The structure expanded by one parameter constant per line, and the four
  // parameter justifications t_d(x,y) = <v_d>, t_c(y,x) = <v_c>,
  // t_b(x,y) = <v_b>, t_a(y,x) = <v_a>.
  FiniteStructure expanded;
  std::vector<Formula> justifications;
};

EptInstance ept_full_instance(const FiniteStructure& s, const Term& ta, const Term& tb,
                              const Term& tc, const Term& td, Element a, Element b, Element c,
                              Element d);
bool ept_full_check(const FiniteStructure& s, const Term& ta, const Term& tb, const Term& tc,
                    const Term& td, Element a, Element b, Element c, Element d);

}  // namespace anaprop
