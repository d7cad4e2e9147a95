#include "doctest.h"

#include <stdexcept>

#include "anaprop/numbers.hpp"

using namespace anaprop;

TEST_CASE("descriptors") {
  CHECK(e_type(1, 3).delta == 2);
  CHECK(to_string(e_witness(e_type(1, 3), 0)) == "S(S(x)) = y");
  CHECK(e_type(3, 1).delta == -2);
  CHECK(to_string(e_witness(e_type(3, 1), 0)) == "x = S(S(y))");
  CHECK(e_type(4, 4).delta == 0);
  CHECK(to_string(e_witness(e_type(4, 4), 0)) == "x = y");
  CHECK(to_string(e_witness(e_type(0, 1), 1)) == "S(S(x)) = S(y)");
  CHECK(e_family(e_type(1, 3)) == "S^(2+m)(x) = S^m(y), m >= 0");
  CHECK_THROWS_AS(e_type(-1, 2), std::invalid_argument);
}

TEST_CASE("membership") {
  CHECK(e_member({2}, 5, 3));
  CHECK_FALSE(e_member({2}, 3, 5));
  CHECK(e_member({0}, 0, 0));
  // S^k(a) = S^l(b) in N iff a + k = b + l.
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 0; b <= 6; ++b)
      for (std::int64_t k = 0; k <= 10; ++k)
        for (std::int64_t l = 0; l <= 10; ++l) {
          // S^k(x) = S^l(y) holds at (a,b) iff a+k = b+l; the descriptor of a->b holds it
          // iff it holds at (a,b).
          CHECK(e_member(e_type(a, b), k, l) == (a + k == b + l));
        }
}

TEST_CASE("intersections") {
  CHECK(e_intersect({2}, {2}) == EJustDescriptor{2});
  CHECK_FALSE(e_intersect({2}, {-2}));
}

TEST_CASE("difference proportions") {
  CHECK(e_proportion(2, 5, 7, 10));
  CHECK_FALSE(e_proportion(0, 0, 0, 1));
  CHECK(e_proportion(3, 8, 3, 8));
  auto r = e_proportion_report(0, 2, 5, 6);
  CHECK_FALSE(r.holds);
  REQUIRE(r.arrows[0].blocking);
  CHECK(*r.arrows[0].blocking == 7);
  auto neg = e_arrow_holds(5, 0, 1, 0);
  CHECK_FALSE(neg.holds);
  CHECK_FALSE(neg.blocking);  // 1 - 5 is not a natural number
}
