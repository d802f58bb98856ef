#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ybe/permutation.hpp"
#include "ybe/rewrite.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// A permutation group given by generators together with its full list
/// of elements. Closure is a plain worklist over a hash set.
class PermGroup {
 public:
  /// Throws BoundExceeded (with the order reached so far) when the closure
  /// grows past `bound` elements.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                            std::size_t bound = 1'000'000);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  bool contains(const Permutation& p) const { return members_.count(p) != 0; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation, PermutationHash> members_;
};

/// The group generated by the L_x.
PermGroup permutation_group_L(const SolutionMap& s, std::size_t bound = 1'000'000);

/// Orbits of the group generated by the L_x, each sorted, ordered by least
/// point. Throws Falsification if an orbit is not r-invariant.
std::vector<std::vector<Index>> orbits_left(const SolutionMap& s);

/// r maps subset^2 onto itself.
bool is_r_invariant(const SolutionMap& s, const std::vector<Index>& subset);

/// G = G^(0) > G^(1) > ...; stops at the trivial group or when a term
/// repeats. Each term is the normal closure of the commutators of the
/// previous term's generators.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// The finite quotient G/A, A generated by the x_i^M, realized on
/// exponent vectors with entries in [0, M). The product concatenates
/// ordered words, reduces to normal form and drops x_g^M blocks.
class QuotientGroup {
 public:
  /// Throws BoundExceeded when M^n > bound; `p` must be a certified
  /// skew-type presentation of `s`.
  QuotientGroup(const SolutionMap& s, const Presentation& p, std::uint64_t bound = 100'000);

  std::uint64_t modulus() const noexcept { return M_; }
  std::uint64_t order() const noexcept { return order_; }
  const Presentation& presentation() const noexcept { return p_; }

  std::uint64_t encode(const ExponentVector& e) const;
  ExponentVector decode(std::uint64_t code) const;

  ExponentVector identity() const;
  /// Image of an arbitrary word.
  ExponentVector image(const Word& w) const;
  ExponentVector multiply(const ExponentVector& a, const ExponentVector& b) const;
  /// y_d^{M-1} ... y_1^{M-1} for a = y_1 ... y_d.
  ExponentVector inverse(const ExponentVector& a) const;

 private:
  Presentation p_;
  std::uint64_t M_;
  std::uint64_t order_;
};

struct GroupAxiomReport {
  bool closure = true;        // every row and column of the table is a permutation
  bool identity = true;
  bool inverses = true;
  bool associativity = true;
  bool exhaustive_associativity = false;
  std::uint64_t triples_checked = 0;
  bool powers_trivial = true;  // x_i^M maps to the identity
  std::optional<std::string> witness;
  bool ok() const noexcept {
    return closure && identity && inverses && associativity && powers_trivial;
  }
};

/// Associativity is exhaustive when order^3 <= 10^7, otherwise checked on
/// `samples` triples drawn with `seed`.
GroupAxiomReport verify_group_axioms(const QuotientGroup& g, std::uint64_t seed = 1,
                                     std::uint64_t samples = 100'000);

struct SylowPiece {
  std::uint64_t prime = 0;
  unsigned alpha = 0;
  std::uint64_t q = 0;       // M / p^alpha
  std::uint64_t order = 0;
  std::optional<std::uint64_t> expected_order;  // p^{n alpha} at quotient level
  bool prime_power = false;
  bool normal = false;  // recorded only
};

struct SylowReport {
  std::string level;  // "quotient" or "G_L"
  std::string notice;
  std::uint64_t M = 1;
  std::uint64_t group_order = 1;
  std::vector<SylowPiece> pieces;
  bool orders_ok = true;
  bool coprime = true;
  bool pairwise_commute = true;
  bool covers = true;
  bool ok() const noexcept { return orders_ok && coprime && pairwise_commute && covers; }
};

/// Prime factorization as (p, alpha) pairs, p increasing.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

/// Pieces generated by the images of the x_j^{q_i}. Works on the quotient
/// when M^n <= quotient_bound and `p` is given, else on G_L with a notice.
SylowReport sylow_decomposition(const SolutionMap& s, const Presentation* p,
                                std::uint64_t quotient_bound = 100'000,
                                std::size_t perm_bound = 1'000'000);

struct DecomposabilityReport {
  std::uint64_t M = 1;
  std::size_t n = 0;
  std::vector<std::uint64_t> primes_of_n_not_dividing_M;
  bool gcd_criterion = false;
  // (p, x): p | n and x lies in no L_y-cycle of length divisible by p.
  std::vector<std::pair<std::uint64_t, Index>> outside_p_cycles;
  bool cycle_criterion = false;
  std::size_t orbit_count = 0;
  /// Whenever a criterion fires there are at least two orbits.
  bool consistent = true;
};

DecomposabilityReport decomposability_criteria(const SolutionMap& s);

}  // namespace ybe
