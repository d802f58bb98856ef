#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

/// Square-free solutions of size n up to isomorphism, each in canonical
/// form, ordered by number of moved pairs and then by table. The search
/// runs over assignments x -> L_x with L_x(x) = x, sharded on L_{x_1}
/// across `jobs` threads. Throws ValidationError unless 1 <= n <= 5.
std::vector<SolutionMap> enumerate_square_free(std::size_t n, unsigned jobs = 1);

/// Independent search over every involution of X x X fixing the diagonal.
/// Limited to n <= 4.
std::vector<SolutionMap> enumerate_square_free_raw(std::size_t n);

struct CatalogEntry {
  SolutionMap solution;
  std::uint64_t M = 1;
  std::size_t orbit_count = 0;
  std::optional<std::size_t> level;
  std::optional<std::size_t> irretractable_at;
  std::optional<std::vector<Index>> ordering;
  std::string ordering_strategy;
  std::uint64_t group_order = 1;  // |G_L|
  std::size_t relations = 0;      // relations xy = r(xy) other than xy = yx

  bool trivial() const noexcept { return relations == 0; }
  bool decomposable() const noexcept { return orbit_count >= 2; }
  bool retractable() const noexcept { return solution.size() == 1 || !irretractable_at || *irretractable_at > 0; }
};

CatalogEntry survey_entry(const SolutionMap& s);
std::vector<CatalogEntry> survey(std::size_t n, unsigned jobs = 1);

struct ConjectureAudit {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t retractable = 0;
  std::vector<SolutionMap> counterexamples;
};

/// Every square-free solution of size n with n >= 2 is retractable.
/// Reported, never asserted.
ConjectureAudit audit_retractability(std::size_t n, unsigned jobs = 1);

}  // namespace ybe
