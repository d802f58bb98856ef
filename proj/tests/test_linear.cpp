#include "doctest.h"

#include "support.hpp"
#include "ybe/errors.hpp"
#include "ybe/linear.hpp"

using namespace ybe;
using namespace ybe::test;

namespace {

std::vector<Rational> with_rule_coeff(const Presentation& p, Pair lhs, Rational c) {
  std::vector<Rational> out;
  for (const auto& r : p.rules()) out.push_back(r.lhs == lhs ? c : r.coeff);
  return out;
}

Presentation q_commutative(std::size_t n, const std::vector<Rational>& q) {
  auto p = relations_of(SolutionMap::trivial(n));
  return p.with_coefficients(q);
}

}  // namespace

TEST_CASE("coefficient maps") {
  SolutionMap s3 = fixture("n3.ybe");
  BinomialLinearMap one(s3);
  CHECK(one.coeff({2, 0}) == 1);
  CHECK(one.apply({2, 0}).basis == Pair{1, 2});

  BinomialLinearMap two(s3, {{{2, 0}, Rational(2)}});
  CHECK(two.coeff({1, 2}) == Rational(1, 2));

  CHECK_THROWS_AS(BinomialLinearMap(s3, {{{2, 0}, Rational(0)}}), ValidationError);
  CHECK_THROWS_AS(BinomialLinearMap(s3, {{{0, 0}, Rational(3)}}), ValidationError);
  CHECK_THROWS_AS(BinomialLinearMap(s3, {{{2, 0}, Rational(2)}, {{1, 2}, Rational(2)}}),
                  ValidationError);
}

TEST_CASE("linear braid equation") {
  CHECK(check_linear_ybe(BinomialLinearMap(fixture("n3.ybe"))).ok);
  auto flip = check_linear_ybe(BinomialLinearMap(SolutionMap::trivial(3)));
  CHECK(flip.ok);
  CHECK(flip.triples_checked == 27);

  auto p3 = relations_of(fixture("n3.ybe"));
  auto bad = check_linear_ybe(
      BinomialLinearMap::from_presentation(p3.with_coefficients(with_rule_coeff(p3, {1, 0}, 2))));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  CHECK(bad.lhs.basis == bad.rhs.basis);
  CHECK(bad.lhs.coeff != bad.rhs.coeff);
}

TEST_CASE("quantum Yang-Baxter equation and unitarity") {
  auto r3 = check_qybe_unitarity(BinomialLinearMap(fixture("n3.ybe")));
  CHECK(r3.qybe);
  CHECK(r3.unitarity);

  auto r6 = check_qybe_unitarity(BinomialLinearMap(fixture("n6_noninvolutive.ybe")));
  CHECK(r6.qybe);
  CHECK_FALSE(r6.unitarity);
  REQUIRE(r6.unitarity_witness);
  CHECK(r6.unitarity_image.basis != *r6.unitarity_witness);

  auto ri = check_qybe_unitarity(BinomialLinearMap(SolutionMap::identity(3)));
  CHECK(ri.qybe);
  CHECK(ri.unitarity);
}

TEST_CASE("coefficient overlap check") {
  auto p3 = relations_of(fixture("n3.ybe"));
  auto ok = coeff_groebner_check(p3);
  CHECK(ok.ok);
  CHECK(ok.overlaps_checked == 1);
  for (const auto& [w, a] : ok.alpha) CHECK(a == 1);

  for (Rational q : {Rational(1), Rational(2), Rational(-1, 3)}) {
    auto r = skew_lemma_roundtrip(q_commutative(3, {q, q, q}));
    CHECK(r.ybe.ok);
    CHECK(r.groebner.ok);
    CHECK(r.agree);
    CHECK(r.groebner.alpha.begin()->second == q * q * q);
  }

  // Each path of x3x2x1 applies every commutation rule once.
  auto p = relations_of(SolutionMap::trivial(3));
  auto single = skew_lemma_roundtrip(p.with_coefficients(with_rule_coeff(p, {2, 0}, 5)));
  CHECK(single.ybe.ok);
  CHECK(single.groebner.ok);

  auto perturbed = skew_lemma_roundtrip(p3.with_coefficients(with_rule_coeff(p3, {1, 0}, 2)));
  CHECK_FALSE(perturbed.ybe.ok);
  CHECK_FALSE(perturbed.groebner.ok);
  CHECK(perturbed.agree);
  REQUIRE(perturbed.groebner.failing_overlap);
  CHECK(perturbed.groebner.reducts.size() == 2);

  auto middle = skew_lemma_roundtrip(p3.with_coefficients(with_rule_coeff(p3, {2, 0}, 2)));
  CHECK(middle.ybe.ok);
  CHECK(middle.groebner.ok);

  std::vector<Rule> not_skew{{{1, 0}, {0, 1}, 1}};
  CHECK_THROWS_AS(coeff_groebner_check(Presentation(3, {0, 1, 2}, not_skew)), ContractViolation);
}

TEST_CASE("property: braid and unitarity bridge on coefficient-one lifts") {
  Rng rng(41);
  std::vector<SolutionMap> inputs = catalog_up_to_4();
  inputs.push_back(fixture("n6_noninvolutive.ybe"));
  inputs.push_back(fixture("level3_n10_unbraided.ybe"));
  for (int k = 0; k < 200; ++k) inputs.push_back(random_bijection(2 + k % 2, rng));
  for (const auto& s : inputs) {
    auto c = classify(s);
    BinomialLinearMap R(s);
    auto q = check_qybe_unitarity(R);
    CHECK(q.qybe == c.braided);
    CHECK(q.unitarity == c.involutive);
    CHECK(check_linear_ybe(R).ok == c.braided);
  }
}

TEST_CASE("property: the two predicates agree under random coefficients") {
  Rng rng(20240601);
  std::vector<SolutionMap> inputs = catalog_up_to_4();
  inputs.push_back(fixture("gen11.ybe"));
  std::size_t disagreements = 0, both_false = 0;
  for (const auto& s : inputs) {
    if (s.size() < 2) continue;
    auto p = relations_of(s, *find_skew_ordering(s).ordering);
    auto base = skew_lemma_roundtrip(p);
    CHECK(base.ybe.ok);
    CHECK(base.agree);
    int trials = s.size() == 11 ? 10 : 100;
    for (int t = 0; t < trials; ++t) {
      auto r = skew_lemma_roundtrip(p.with_coefficients(random_coefficients(p.rules().size(), rng)));
      if (!r.agree) ++disagreements;
      if (!r.ybe.ok) ++both_false;
    }
  }
  CHECK(disagreements == 0);
  CHECK(both_false > 0);
}
