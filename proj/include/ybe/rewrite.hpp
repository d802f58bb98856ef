#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/rational.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// A word in the generators, stored as generator indices.
using Word = std::vector<Index>;

/// Exponents a_g indexed by generator g. Names the ordered monomial whose
/// factors appear in rank order.
using ExponentVector = std::vector<unsigned>;

/// lhs -> coeff * rhs, both sides words of length two.
struct Rule {
  Pair lhs;
  Pair rhs;
  Rational coeff{1};
};

struct GroebnerReport {
  bool ok = true;
  std::size_t overlaps_checked = 0;
  // First ambiguity whose two reductions disagree.
  std::optional<Word> failing_overlap;
  Word left_reduct;
  Rational left_coeff{0};
  Word right_reduct;
  Rational right_coeff{0};
};

/// Quadratic binomial presentation over an ordered generating set.
/// `ordering[k]` is the generator of rank k (x_1 < ... < x_n in rank
/// order). Immutable; the overlap check runs once at construction.
class Presentation {
 public:
  /// Throws ValidationError if a word occurs in two rule sides, a rule
  /// does not decrease deg-lex order, or a coefficient is zero.
  Presentation(std::size_t n, std::vector<Index> ordering, std::vector<Rule> rules,
               std::vector<std::string> names = {});

  std::size_t size() const noexcept { return n_; }
  const std::vector<Index>& ordering() const noexcept { return ordering_; }
  Index rank(Index g) const { return rank_[g]; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Rule whose LHS is (a, b), if any.
  const Rule* rule_for(Index a, Index b) const;

  /// Skew-polynomial shape: n(n-1)/2 rules covering every off-diagonal
  /// word, each x_j x_i -> x_i' x_j' with i < j, i' < j', i' < j in rank.
  bool is_skew() const noexcept { return skew_violations_.empty(); }
  const std::vector<std::string>& skew_violations() const noexcept { return skew_violations_; }

  const GroebnerReport& groebner() const noexcept { return groebner_; }
  bool is_groebner() const noexcept { return groebner_.ok; }

  /// Same rules with new coefficients, keyed like `rules()`.
  Presentation with_coefficients(const std::vector<Rational>& coeffs) const;

  bool less(const Word& a, const Word& b) const;

 private:
  std::size_t n_;
  std::vector<Index> ordering_;
  std::vector<Index> rank_;
  std::vector<Rule> rules_;
  std::vector<int> lookup_;
  std::vector<std::string> names_;
  std::vector<std::string> skew_violations_;
  GroebnerReport groebner_;
};

struct Reduction {
  Word word;
  Rational coeff{1};
  std::size_t steps = 0;
};

/// Leftmost reduction to an irreducible word. Does not require the
/// Groebner property; the result then depends on the strategy.
Reduction reduce(const Presentation& p, Word w);

/// Every irreducible (word, coefficient) reachable from `w` by any
/// sequence of rewrites. An independent confluence oracle for short words.
std::vector<std::pair<Word, Rational>> all_reducts(const Presentation& p, const Word& w);

GroebnerReport check_groebner(const Presentation& p);

struct NormalForm {
  ExponentVector exponents;
  Rational coeff{1};
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Throws ContractViolation unless `p` is a skew-type Groebner basis.
NormalForm normal_form(const Presentation& p, const Word& w);

/// The ordered word x_1^{a_1} ... x_n^{a_n} in rank order.
Word ordered_word(const Presentation& p, const ExponentVector& e);
std::string format_monomial(const Presentation& p, const ExponentVector& e);

/// One rule per r-orbit {u, r(u)} with u != r(u); the LHS is the
/// deg-lex-larger word. Requires s involutive (ValidationError otherwise).
Presentation relations_of(const SolutionMap& s, std::vector<Index> ordering);
Presentation relations_of(const SolutionMap& s);

/// Inverse of relations_of: swaps the two sides of each rule.
SolutionMap solution_of(const Presentation& p);

/// Words of length d avoiding every LHS, counted by dynamic programming.
std::uint64_t count_normal_monomials(const Presentation& p, unsigned d);
/// Number of distinct normal forms among all n^d words (Groebner only).
std::uint64_t count_normal_forms_exhaustive(const Presentation& p, unsigned d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All exponent vectors of length n and total degree d, in
/// lexicographically decreasing order.
std::vector<ExponentVector> exponent_vectors(std::size_t n, unsigned d);

struct CentralityReport {
  bool powers_commute = true;
  bool power_sum_central = true;
  std::optional<Pair> powers_witness;     // (i, j) with x_i^M x_j^M != x_j^M x_i^M
  std::optional<Index> power_sum_witness;  // generator j
  bool ok() const noexcept { return powers_commute && power_sum_central; }
};

CentralityReport check_centrality(const Presentation& p, unsigned M);

struct OrderingSearch {
  std::optional<std::vector<Index>> ordering;
  std::string strategy;  // "natural", "decomposition", "exhaustive" or "none"
  std::vector<std::string> trace;
};

/// Natural order first, then the recursive orbit-decomposition order,
/// then every ordering when n <= exhaustive_bound. An ordering is
/// accepted only if relations_of is skew and passes the overlap check.
OrderingSearch find_skew_ordering(const SolutionMap& s, std::size_t exhaustive_bound = 8);

/// Orbit-decomposition ordering: blocks are the orbits of the group
/// generated by the L_x, each ordered recursively on its restriction.
std::vector<Index> decomposition_ordering(const SolutionMap& s);

}  // namespace ybe
