#include "doctest.h"
#include "honeymirror/localcat.hpp"
#include "localcat_oracle.hpp"

using namespace hm;

TEST_CASE("interval basics") {
  const IntervalObject a = interval(4, 3, 1);
  CHECK(a.length() == 3);
  CHECK(a.contains(0));
  CHECK_FALSE(a.contains(2));
  CHECK(all_intervals(3).size() == 12);  // size * (size - 1) proper intervals, two parities
}

TEST_CASE("Hom of intervals matches the projective model") {
  for (int size = 1; size <= 4; ++size) {
    for (const auto& a : all_intervals(size)) {
      for (const auto& b : all_intervals(size)) {
        for (int cut = 0; cut < size; ++cut) CHECK(hom_intervals(a, b) == oracle::brute_hom(a, b, cut));
      }
    }
  }
}

TEST_CASE("endomorphisms of a simple object") {
  const LocalHomSpace h = hom_intervals(simple_object(3, 1), simple_object(3, 1));
  CHECK(h.even == 1);
  CHECK(h.odd == 0);
}

TEST_CASE("restriction kills the removed simple") {
  CHECK_FALSE(restrict(2, simple_object(4, 2)).has_value());
  const auto r = restrict(1, interval(4, 1, 2));
  REQUIRE(r);
  CHECK(*r == interval(3, 1, 1));
}

TEST_CASE("corestriction inverts restriction") {
  for (int size = 2; size <= 4; ++size) {
    for (const auto& a : all_intervals(size - 1)) {
      for (int pos = 0; pos < size; ++pos) {
        const IntervalObject c = corestrict_object(pos, a);
        const auto back = restrict(pos, c);
        REQUIRE(back);
        CHECK(*back == a);
      }
    }
  }
}
