#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/permutation.hpp"
#include "ybe/rewrite.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// Components of r(x, y) = (L_x(y), R_y(x)) for a non-degenerate map.
struct ActionTable {
  std::vector<Permutation> left;
  std::vector<Permutation> right;
  std::vector<std::uint64_t> orders;  // M_x = order of L_x
  std::uint64_t cyclic_degree = 1;    // M = lcm of the M_x
};

/// Throws ValidationError naming the first x whose L_x or R_x is not a
/// bijection.
ActionTable compute_actions(const SolutionMap& s);

/// The cycles of L_y through x and of L_x through y, each starting at its
/// base point.
struct CyclePair {
  Pair base;  // (y, x)
  std::vector<Index> x_cycle;
  std::vector<Index> y_cycle;
};

/// Builds the pair for (y, x) with x != y and checks every grid equality
/// r(x_i y_j) = (y_{j+1}, x_{i-1}), r(y_j x_i) = (x_{i+1}, y_{j-1}).
/// Throws Falsification with the failing (i, j) on a violation.
CyclePair cycle_pair(const SolutionMap& s, Index y, Index x);

struct CyclicReport {
  bool weak = true;
  bool strong = true;
  std::optional<std::string> weak_witness;
  std::optional<std::string> strong_witness;
};

/// Weak: for every y != x, with (x_1..x_m) the L_y-cycle of x and
/// y_{j-1} = R_x(y_j), r(y_j x_i) = (x_{i+1}, y_{j-1}) for all i, j.
/// Strong: the y-cycle comes from L_x and both grid equalities hold.
CyclicReport check_cyclic_conditions(const SolutionMap& s);

struct PowerIdentityReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // at most a handful, for display
};

/// Compares normal forms of both sides of, for all x != y:
///   y^m x = x y_k^m          (m = |L_y-cycle of x|, y_k = L_x^{-1}(y))
///   y^p x^q = (L_y^p x)^q (L_x^{-q} y)^p   for 1 <= p, q <= max_exp
///   x^{M_x} y = y (L_y^{-1} x)^{M_x}
///   x^M y^M = y^M x^M
/// max_exp = 0 selects M + 1.
PowerIdentityReport verify_power_identities(const SolutionMap& s, const Presentation& p,
                                            unsigned max_exp = 0);

}  // namespace ybe
