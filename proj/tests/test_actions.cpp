#include "doctest.h"

#include "support.hpp"
#include "ybe/actions.hpp"
#include "ybe/errors.hpp"
#include "ybe/group.hpp"

using namespace ybe;
using namespace ybe::test;

TEST_CASE("left and right actions") {
  auto a3 = compute_actions(fixture("n3.ybe"));
  CHECK(a3.left[0].is_identity());
  CHECK(a3.left[1].is_identity());
  CHECK(a3.left[2] == Permutation::from_cycles(3, {{1, 2}}));
  CHECK(a3.orders == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(a3.cyclic_degree == 2);

  auto a6 = compute_actions(fixture("n6_noninvolutive.ybe"));
  CHECK(a6.left[0] == Permutation::from_cycles(6, {{3, 4}, {5, 6}}));
  CHECK(a6.right[0] == Permutation::from_cycles(6, {{3, 6}, {4, 5}}));
  CHECK(a6.right[0] != a6.left[0].inverse());

  CHECK(compute_actions(fixture("sylow_n10.ybe")).cyclic_degree == 12);

  auto f = Permutation::from_cycles(2, {{1, 2}});
  std::vector<Index> constant{0, 0};
  CHECK_THROWS_AS(compute_actions(build_permutation_solution(constant, f.images())), ValidationError);
}

TEST_CASE("cycle pairs") {
  auto c = cycle_pair(fixture("n3.ybe"), 2, 0);
  CHECK(c.x_cycle == std::vector<Index>{0, 1});
  CHECK(c.y_cycle == std::vector<Index>{2});

  auto t = cycle_pair(SolutionMap::trivial(3), 0, 2);
  CHECK(t.x_cycle.size() == 1);
  CHECK(t.y_cycle.size() == 1);

  auto c4 = cycle_pair(fixture("n4.ybe"), 2, 0);
  CHECK(c4.x_cycle == std::vector<Index>{0, 1});
  CHECK(c4.y_cycle == std::vector<Index>{2, 3});
}

TEST_CASE("cyclic conditions") {
  auto r3 = check_cyclic_conditions(fixture("n3.ybe"));
  CHECK(r3.weak);
  CHECK(r3.strong);
  auto r6 = check_cyclic_conditions(fixture("n6_noninvolutive.ybe"));
  CHECK(r6.weak);
  CHECK_FALSE(r6.strong);
  CHECK(r6.strong_witness.has_value());
  auto t = check_cyclic_conditions(SolutionMap::trivial(4));
  CHECK(t.weak);
  CHECK(t.strong);
}

TEST_CASE("power identities") {
  SolutionMap s3 = fixture("n3.ybe");
  auto p3 = relations_of(s3);
  // y^m x = x (L_x^{-1} y)^m with x = x1, y = x3, m = 2.
  CHECK(normal_form(p3, word({3, 3, 1})) == normal_form(p3, word({1, 3, 3})));
  CHECK_FALSE(normal_form(p3, word({3, 3, 1})) == normal_form(p3, word({1, 2, 2})));

  for (const char* name : {"n3.ybe", "n4.ybe", "gen11.ybe"}) {
    CAPTURE(name);
    SolutionMap s = fixture(name);
    auto p = relations_of(s, *find_skew_ordering(s).ordering);
    auto rep = verify_power_identities(s, p);
    CHECK(rep.ok);
    CHECK(rep.checked > 0);
  }

  auto p4 = relations_of(fixture("n4.ybe"));
  for (Index i = 1; i <= 4; ++i)
    for (Index j = 1; j <= 4; ++j)
      CHECK(normal_form(p4, word({i, i, j, j})) == normal_form(p4, word({j, j, i, i})));
}

TEST_CASE("property: catalog actions") {
  for (const auto& s : catalog_up_to_4()) {
    auto a = compute_actions(s);
    for (Index x = 0; x < s.size(); ++x) CHECK(a.right[x] == a.left[x].inverse());

    // L_x is the product of its cycles through orbit representatives.
    for (Index x = 0; x < s.size(); ++x) {
      Permutation rebuilt = Permutation::identity(s.size());
      for (const auto& cyc : a.left[x].cycles()) {
        std::vector<std::vector<Index>> one{cyc};
        for (auto& v : one[0]) ++v;
        rebuilt = Permutation::from_cycles(s.size(), one) * rebuilt;
      }
      CHECK(rebuilt == a.left[x]);
    }

    // M_x is constant on left orbits.
    for (const auto& orbit : orbits_left(s))
      for (Index x : orbit) CHECK(a.orders[x] == a.orders[orbit.front()]);

    // The groups generated by the L_x and by the R_x coincide.
    auto gl = PermGroup::generate(s.size(), a.left);
    auto gr = PermGroup::generate(s.size(), a.right);
    CHECK(gl.order() == gr.order());
    for (const auto& g : gr.elements()) CHECK(gl.contains(g));

    // Every grid point of a cycle pair returns the same pair of cycles.
    for (Index y = 0; y < s.size(); ++y)
      for (Index x = 0; x < s.size(); ++x) {
        if (x == y) continue;
        auto base = cycle_pair(s, y, x);
        for (Index xi : base.x_cycle)
          for (Index yj : base.y_cycle) {
            auto other = cycle_pair(s, yj, xi);
            CHECK(std::is_permutation(other.x_cycle.begin(), other.x_cycle.end(),
                                      base.x_cycle.begin(), base.x_cycle.end()));
            CHECK(std::is_permutation(other.y_cycle.begin(), other.y_cycle.end(),
                                      base.y_cycle.begin(), base.y_cycle.end()));
          }
      }

    auto cyc = check_cyclic_conditions(s);
    CHECK(cyc.weak);
    CHECK(cyc.strong);

    if (s.size() >= 2) {
      auto p = relations_of(s, *find_skew_ordering(s).ordering);
      CHECK(verify_power_identities(s, p).ok);
      CHECK(check_centrality(p, static_cast<unsigned>(a.cyclic_degree)).ok());
    }
  }
}
