#include "doctest.h"

#include "support.hpp"
#include "ybe/errors.hpp"
#include "ybe/istructure.hpp"

using namespace ybe;
using namespace ybe::test;

namespace {

IStructure build(const SolutionMap& s, unsigned bound) {
  return IStructure(s, relations_of(s, *find_skew_ordering(s).ordering), bound);
}

UMonomial random_monomial(std::size_t n, unsigned d, Rng& rng) {
  UMonomial a(n, 0);
  for (unsigned k = 0; k < d; ++k) ++a[rng() % n];
  return a;
}

}  // namespace

TEST_CASE("I-structure values on the four-point solution") {
  IStructure is(fixture("n4.ybe"), relations_of(fixture("n4.ybe")), 6);
  CHECK(is.left(ev({0, 1, 0, 1})) == ev({1, 0, 0, 1}));   // v(u2u4) = x1x4
  CHECK(is.right(ev({0, 1, 0, 1})) == ev({0, 1, 1, 0}));  // v1(u2u4) = x2x3
  CHECK(normal_form(is.presentation(), word({4, 1})).exponents == ev({0, 1, 1, 0}));

  CHECK(is.left(ev({0, 2, 0, 1})) == ev({2, 0, 0, 1}));
  CHECK(is.right(ev({0, 2, 0, 1})) == ev({0, 2, 0, 1}));
  CHECK(is.left(ev({1, 0, 1, 0})) == ev({0, 1, 1, 0}));
  CHECK(is.right(ev({1, 0, 1, 0})) == ev({1, 0, 0, 1}));

  // The chain x3 x2^2 = x1 x4 x2 ends at x1^2 x3, not at v(u2^2 u4).
  auto p = is.presentation();
  CHECK(normal_form(p, word({3, 2, 2})) == normal_form(p, word({1, 4, 2})));
  CHECK(normal_form(p, word({3, 2, 2})).exponents == ev({2, 0, 1, 0}));
  CHECK(normal_form(p, word({3, 2, 2})).exponents != is.left(ev({0, 2, 0, 1})));

  CHECK(is.left(ev({0, 0, 0, 0})) == ev({0, 0, 0, 0}));
  CHECK(is.right(ev({0, 0, 0, 0})) == ev({0, 0, 0, 0}));
}

TEST_CASE("powers of a single generator") {
  for (const char* name : {"n3.ybe", "n4.ybe"}) {
    SolutionMap s = fixture(name);
    auto is = build(s, 5);
    for (Index i = 0; i < s.size(); ++i)
      for (unsigned k = 1; k <= 5; ++k) {
        UMonomial a(s.size(), 0);
        a[i] = k;
        CHECK(is.left(a) == a);
        CHECK(is.right(a) == a);
      }
  }
}

TEST_CASE("lattice operations") {
  auto is3 = build(fixture("n3.ybe"), 5);
  CHECK(is3.lcm_left(ev({1, 0, 0}), ev({1, 0, 0})) == ev({1, 0, 0}));
  CHECK(is3.lcm_left(ev({1, 0, 0}), ev({0, 0, 1})) == ev({0, 1, 1}));

  IStructure is4(fixture("n4.ybe"), relations_of(fixture("n4.ybe")), 6);
  CHECK(is4.lcm_left(ev({0, 2, 0, 0}), ev({0, 0, 0, 1})) == ev({2, 0, 0, 1}));
  auto oracle = minimal_common_left_multiples(is4.presentation(), ev({0, 2, 0, 0}),
                                              ev({0, 0, 0, 1}), 4);
  REQUIRE(oracle.size() == 1);
  CHECK(oracle[0] == ev({2, 0, 0, 1}));
}

TEST_CASE("heads and tails") {
  auto p3 = relations_of(fixture("n3.ybe"));
  // x3 x1 = x2 x3
  auto ht = heads_tails(p3, ev({0, 1, 1}));
  CHECK(ht.heads == std::set<Index>{1, 2});
  CHECK(ht.tails == std::set<Index>{0, 2});
  auto pow = heads_tails(p3, ev({0, 3, 0}));
  CHECK(pow.heads == std::set<Index>{1});
  CHECK(pow.tails == std::set<Index>{1});
}

TEST_CASE("property: I-structure audit on the catalog") {
  for (const auto& s : catalog_up_to_4()) {
    if (s.size() < 2) continue;
    auto is = build(s, 6);
    auto audit = audit_istructure(is, 5);
    CAPTURE(audit.witness.value_or(""));
    CHECK(audit.ok());

    // v(u_1 ... u_n) has n heads and n tails.
    auto w0 = is.left(UMonomial(s.size(), 1));
    auto ht = heads_tails(is.presentation(), w0);
    CHECK(ht.heads.size() == s.size());
    CHECK(ht.tails.size() == s.size());
  }
  auto is11 = build(fixture("gen11.ybe"), 4);
  CHECK(audit_istructure(is11, 3).ok());
  CHECK_THROWS_AS(audit_istructure(is11, 5), BoundExceeded);
}

TEST_CASE("property: bijectivity per degree") {
  for (const auto& s : catalog_up_to_4()) {
    auto is = build(s, 5);
    for (unsigned d = 0; d <= 5; ++d) {
      std::set<ExponentVector> left, right;
      for (const auto& a : exponent_vectors(s.size(), d)) {
        left.insert(is.left(a));
        right.insert(is.right(a));
        CHECK(degree(is.left(a)) == d);
      }
      CHECK(left.size() == binomial(s.size() + d - 1, d));
      CHECK(right.size() == binomial(s.size() + d - 1, d));
    }
  }
}

TEST_CASE("property: lcm agrees with the divisibility oracle") {
  Rng rng(21);
  for (const char* name : {"n3.ybe", "n4.ybe"}) {
    SolutionMap s = fixture(name);
    auto is = build(s, 6);
    const auto& p = is.presentation();
    for (int trial = 0; trial < 15; ++trial) {
      auto a = is.left(random_monomial(s.size(), 1 + trial % 2, rng));
      auto b = is.left(random_monomial(s.size(), 1 + trial % 3, rng));
      auto l = is.lcm_left(a, b);
      auto oracle = minimal_common_left_multiples(p, a, b, 6);
      REQUIRE(oracle.size() == 1);
      CHECK(oracle[0] == l);
      auto g = is.gcd_left(a, b);
      CHECK(left_divides(p, g, a));
      CHECK(left_divides(p, g, b));
      CHECK(right_divides(p, a, is.lcm_right(a, b)));
      CHECK(right_divides(p, b, is.lcm_right(a, b)));
    }
  }
}

TEST_CASE("property: preimages invert the I-structures") {
  Rng rng(22);
  for (const auto& s : catalog_up_to_4()) {
    if (s.size() < 2) continue;
    auto is = build(s, 5);
    for (int trial = 0; trial < 10; ++trial) {
      Word w = random_word(s.size(), 1 + trial % 5, rng);
      auto nf = normal_form(is.presentation(), w).exponents;
      CHECK(is.left(is.left_preimage_word(w)) == nf);
      CHECK(is.right(is.right_preimage_word(w)) == nf);
      CHECK(is.left_preimage(nf) == is.left_preimage_word(w));
      CHECK(is.right_preimage(nf) == is.right_preimage_word(w));
    }
  }
}
