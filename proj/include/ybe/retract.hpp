#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/io.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// One step of the retraction tower: x ~ y iff L_x = L_y.
struct RetractStep {
  std::vector<Index> class_of;              // point -> class index
  std::vector<std::vector<Index>> classes;  // ordered by least member
  SolutionMap induced;                      // on the classes, named "[rep]"

  bool irretractable() const noexcept { return classes.size() == class_of.size(); }
};

/// Requires a square-free involutive solution (ContractViolation
/// otherwise). The induced map is checked on every pair of class members;
/// an ill-defined result raises Falsification.
RetractStep retract(const SolutionMap& s);

struct LevelReport {
  std::optional<std::size_t> level;             // Ret^level has one point
  std::optional<std::size_t> irretractable_at;  // stuck with more than one point
  std::vector<std::size_t> sizes;               // |Ret^k|, k = 0, 1, ...
};

LevelReport multipermutation_level(const SolutionMap& s, std::size_t max_steps = 64);

/// {xi : xi^(k) = x^(k)}, sorted. Raises Falsification when the orbit is
/// not r-invariant or its restriction has level above k.
std::vector<Index> retract_orbit(const SolutionMap& s, Index x, std::size_t k);

/// The solution induced on an r-invariant subset (ValidationError if not
/// invariant). Points keep their names and the subset order.
SolutionMap restrict_to(const SolutionMap& s, const std::vector<Index>& subset);

struct UnionSpec {
  SolutionMap x;
  SolutionMap y;
  CrossMaps cross;
};

struct UnionResult {
  SolutionMap z;  // X first, then Y
  PropertyReport report;
};

/// Throws ValidationError when the assembled table is not a bijection or
/// the cross maps have the wrong shape.
UnionResult assemble_union(const UnionSpec& u);

/// Inverse of assemble_union for a partition into X = `subset` and its
/// complement Y. Both parts must be r-invariant and r must exchange
/// X x Y with Y x X.
UnionSpec split_union(const SolutionMap& s, const std::vector<Index>& subset);

struct TwistedUnionReport {
  bool twisted = false;      // a single pair (f, g) describes the cross action
  bool generalized = false;  // independence condition on L_{x^y|Y}, R_{^x y|X}
  bool equalities = false;   // L_{x^y|Y} = L_{x|Y} = L_{^y x|Y} and mirror
  std::optional<std::string> witness;          // first failure of the two conditions
  std::optional<std::string> twisted_witness;

  bool formulations_agree() const noexcept { return generalized == equalities; }
};

/// x^y = R_y(x), ^y x = L_y(x). Throws ValidationError when the partition
/// is not compatible with r.
TwistedUnionReport is_generalized_twisted_union(const SolutionMap& s,
                                                const std::vector<Index>& subset);

}  // namespace ybe
