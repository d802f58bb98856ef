#include "doctest.h"

#include "support.hpp"
#include "ybe/errors.hpp"

using namespace ybe;
using namespace ybe::test;

TEST_CASE("class counts") {
  CHECK(enumerate_square_free(1).size() == 1);
  CHECK(enumerate_square_free(2).size() == 1);
  CHECK(enumerate_square_free(3).size() == 2);
  CHECK(enumerate_square_free(4).size() == 5);
  CHECK(enumerate_square_free(5, 4).size() == 17);
  CHECK_THROWS_AS(enumerate_square_free(6), ValidationError);
  CHECK_THROWS_AS(enumerate_square_free(0), ValidationError);
  CHECK_THROWS_AS(enumerate_square_free_raw(5), ValidationError);
}

TEST_CASE("property: raw involution search agrees") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(enumerate_square_free_raw(n) == enumerate_square_free(n));
  }
}

TEST_CASE("property: sharding does not change the catalog") {
  for (std::size_t n = 3; n <= 5; ++n) CHECK(enumerate_square_free(n, 1) == enumerate_square_free(n, 3));
}

TEST_CASE("property: catalog entries are valid and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto cat = enumerate_square_free(n);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(classify(cat[i]).is_square_free_solution());
      CHECK(canonical_form(cat[i]).form == cat[i]);
      for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK_FALSE(cat[i] == cat[j]);
    }
  }
}

TEST_CASE("known solutions are in the catalog") {
  auto cat3 = enumerate_square_free(3);
  CHECK(std::count(cat3.begin(), cat3.end(), canonical_form(fixture("n3.ybe")).form) == 1);
  auto cat4 = enumerate_square_free(4);
  CHECK(std::count(cat4.begin(), cat4.end(), canonical_form(fixture("n4.ybe")).form) == 1);
  CHECK(cat4.front() == SolutionMap::trivial(4));
}

TEST_CASE("surveys") {
  auto s2 = survey(2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].trivial());

  auto s3 = survey(3);
  REQUIRE(s3.size() == 2);
  const auto& e = s3[1];
  CHECK_FALSE(e.trivial());
  CHECK(e.M == 2);
  CHECK(e.orbit_count == 2);
  CHECK(e.level == 2u);
  CHECK(e.ordering.has_value());
  CHECK(e.relations == 2);

  auto s4 = survey(4);
  std::size_t best = 0;
  for (const auto& x : s4) best = std::max(best, x.relations);
  CHECK(best == 4);
  auto sigma = survey_entry(canonical_form(fixture("n4.ybe")).form);
  CHECK(sigma.relations == best);
  CHECK(sigma.group_order == 4);
  CHECK(std::count_if(s4.begin(), s4.end(), [&](const CatalogEntry& x) { return x.relations == best; }) == 2);
  CHECK(std::count_if(s4.begin(), s4.end(), [](const CatalogEntry& x) { return !x.trivial(); }) == 4);

  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& x : survey(n)) {
      CHECK(x.ordering.has_value());
      CHECK(x.decomposable());
      CHECK(x.retractable());
    }
}

TEST_CASE("retractability audit") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto a = audit_retractability(n);
    CHECK(a.n == n);
    CHECK(a.retractable == a.total);
    CHECK(a.counterexamples.empty());
  }
}
