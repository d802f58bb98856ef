#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ybe {

/// Points of X are 0-based internally; file formats and user-facing
/// output are 1-based.
using Index = std::uint32_t;

/// A permutation of {0, ..., n-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ValidationError unless `images` is a bijection of [0, n).
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t n);

  /// Builds a permutation of [0, n) from disjoint cycles given 1-based,
  /// e.g. from_cycles(4, {{1, 2}, {3, 4}}) is (1 2)(3 4).
  static Permutation from_cycles(
      std::size_t n, std::initializer_list<std::initializer_list<Index>> cycles);
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Index>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Index operator()(Index x) const { return images_[x]; }
  std::span<const Index> images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation pow(std::int64_t k) const;

  bool is_identity() const noexcept;
  std::uint64_t order() const;

  /// Cycle through `x`, starting at `x`.
  std::vector<Index> cycle_of(Index x) const;
  /// Disjoint cycles of length >= 2, each starting at its least point.
  std::vector<std::vector<Index>> cycles() const;

  /// Cycle notation with 1-based points or the given names; "id" for the
  /// identity.
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace ybe
