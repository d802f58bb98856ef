#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/permutation.hpp"

namespace ybe {

/// An ordered pair of points; also a word of length two.
struct Pair {
  Index first = 0;
  Index second = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A finite set X = {0..n-1} with a bijection r of X x X, stored as a
/// total lookup table indexed by first * n + second.
class SolutionMap {
 public:
  /// Validates that `table` has n*n entries in range and is a bijection.
  SolutionMap(std::size_t n, std::vector<Pair> table,
              std::vector<std::string> names = {});

  /// r(x, y) = (x, y).
  static SolutionMap identity(std::size_t n);
  /// r(x, y) = (y, x).
  static SolutionMap trivial(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Pair operator()(Index x, Index y) const { return table_[x * n_ + y]; }
  Pair operator()(Pair p) const { return (*this)(p.first, p.second); }
  std::span<const Pair> table() const noexcept { return table_; }

  bool has_names() const noexcept { return !names_.empty(); }
  /// Labels of the points; defaults to x1..xn.
  const std::vector<std::string>& names() const noexcept { return display_; }
  const std::string& name(Index x) const { return display_[x]; }
  SolutionMap with_names(std::vector<std::string> names) const;
  /// Index of the point labelled `label`, if any.
  std::optional<Index> find(std::string_view label) const;

  /// Pairs (x, y) with r(x, y) != (x, y).
  std::size_t moved_pairs() const;

  friend bool operator==(const SolutionMap& a, const SolutionMap& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_;
  std::vector<Pair> table_;
  std::vector<std::string> names_;
  std::vector<std::string> display_;
};

/// Classification of a map against the basic predicates. `r_order` is the
/// least k >= 1 with r^k = id, or nullopt when none exists up to the bound.
struct PropertyReport {
  bool involutive = false;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
  bool square_free = false;
  bool braided = false;
  bool symmetric = false;
  std::optional<std::uint64_t> r_order;

  // One violating input per false flag.
  std::optional<Pair> involutive_witness;       // r(r(u)) != u
  std::optional<Index> left_degenerate_at;      // L_x not a bijection
  std::optional<Index> right_degenerate_at;     // R_y not a bijection
  std::optional<Index> square_free_witness;     // r(x, x) != (x, x)
  std::optional<std::vector<Index>> braid_witness;  // triple (x, y, z)

  bool nondegenerate() const noexcept {
    return left_nondegenerate && right_nondegenerate;
  }
  /// Braided, involutive and non-degenerate.
  bool is_solution() const noexcept {
    return braided && involutive && nondegenerate();
  }
  bool is_square_free_solution() const noexcept {
    return is_solution() && square_free;
  }
};

PropertyReport classify(const SolutionMap& s, std::uint64_t order_bound = 64);

/// Applies r1 = r x id or r2 = id x r to a triple.
std::vector<Index> apply_r1(const SolutionMap& s, std::vector<Index> t);
std::vector<Index> apply_r2(const SolutionMap& s, std::vector<Index> t);

/// Checks that b_i -> r^{i,i+1} respects the braid-group relations on X^m
/// (both the far commutation and the braid relation), over all of X^m.
bool braid_group_action_holds(const SolutionMap& s, std::size_t m);

/// r(x, y) = (g(y), f(x)); f and g are arbitrary self-maps of [0, n).
SolutionMap build_permutation_solution(std::span<const Index> f,
                                       std::span<const Index> g);

/// r(x, y) = (L_x(y), L_y^{-1}(x)). When `require_square_free` is set,
/// throws ValidationError if some L_x moves x.
SolutionMap build_from_left_actions(std::span<const Permutation> left,
                                    bool require_square_free = true);

/// Relabels by pi: the result maps (pi x, pi y) to (pi x', pi y') whenever
/// s maps (x, y) to (x', y').
SolutionMap relabel(const SolutionMap& s, const Permutation& pi);

struct CanonicalForm {
  SolutionMap form;
  Permutation relabeling;  // relabel(input, relabeling) == form
};

/// Lexicographically least table over all n! relabelings. Throws
/// BoundExceeded when n > bound.
CanonicalForm canonical_form(const SolutionMap& s, std::size_t bound = 8);

bool isomorphic(const SolutionMap& a, const SolutionMap& b, std::size_t bound = 8);

}  // namespace ybe
