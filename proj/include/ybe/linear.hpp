#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ybe/rational.hpp"
#include "ybe/rewrite.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using Triple = std::array<Index, 3>;

/// A scalar multiple of a basis tensor.
template <class Basis>
struct Term {
  Rational coeff{1};
  Basis basis;
  friend bool operator==(const Term&, const Term&) = default;
};

/// R(u) = c_u r(u) on basis pairs: a monomial automorphism of V (x) V.
class BinomialLinearMap {
 public:
  /// Unlisted pairs default to 1, or to 1/c_{r(u)} when r(u) is listed
  /// and r(r(u)) = u. Throws ValidationError on a zero coefficient, a
  /// coefficient other than 1 on a fixed pair, or c_u c_{r(u)} != 1 on an
  /// r-orbit of size two.
  BinomialLinearMap(SolutionMap r, const std::map<Pair, Rational>& coeffs = {});

  /// R(lhs) = c rhs and R(rhs) = c^{-1} lhs for each rule lhs -> c rhs;
  /// pairs in no rule are fixed with coefficient 1.
  static BinomialLinearMap from_presentation(const Presentation& p);

  const SolutionMap& map() const noexcept { return r_; }
  const Rational& coeff(Pair u) const { return coeffs_[u.first * r_.size() + u.second]; }
  Term<Pair> apply(Pair u) const { return {coeff(u), r_(u)}; }

 private:
  SolutionMap r_;
  std::vector<Rational> coeffs_;
};

struct LinearYbeReport {
  bool ok = true;
  std::uint64_t triples_checked = 0;
  std::optional<Triple> witness;
  Term<Triple> lhs;  // (R (x) id)(id (x) R)(R (x) id) applied to the witness
  Term<Triple> rhs;  // (id (x) R)(R (x) id)(id (x) R)
};

/// Braid form of the equation on all n^3 basis tensors.
LinearYbeReport check_linear_ybe(const BinomialLinearMap& R);

struct QybeReport {
  bool qybe = true;
  bool unitarity = true;
  std::optional<Triple> qybe_witness;
  std::optional<Pair> unitarity_witness;
  Term<Pair> unitarity_image;  // R^21 R applied to the witness
};

/// R' = flip o R: R'^12 R'^13 R'^23 = R'^23 R'^13 R'^12 on all triples and
/// R'^21 R' = 1 on all pairs.
QybeReport check_qybe_unitarity(const BinomialLinearMap& R);

struct CoeffGroebnerReport {
  bool ok = true;
  std::size_t overlaps_checked = 0;
  std::optional<Word> failing_overlap;
  /// Every (irreducible word, scalar) reachable from the failing overlap.
  std::vector<std::pair<Word, Rational>> reducts;
  /// x_k x_j x_i (k > j > i in rank) -> its unique scalar alpha.
  std::map<Word, Rational> alpha;
};

/// Explores every reduction path of every overlap x_k x_j x_i; ok iff
/// each one reaches a single ordered monomial with a single scalar.
/// Requires skew-polynomial shape (ContractViolation otherwise).
CoeffGroebnerReport coeff_groebner_check(const Presentation& p);

struct SkewLemmaReport {
  LinearYbeReport ybe;
  CoeffGroebnerReport groebner;
  bool agree = true;
  std::vector<std::string> trace;
};

/// Both sides of the equivalence "R(relations) solves the YBE iff the
/// relations form a Groebner basis", computed independently.
SkewLemmaReport skew_lemma_roundtrip(const Presentation& p);

/// Nonzero rationals a/b with |a| <= max_abs, 1 <= b <= max_abs.
std::vector<Rational> random_coefficients(std::size_t count, std::mt19937_64& rng,
                                          int max_abs = 5);

std::string format_triple(const SolutionMap& s, const Triple& t);

}  // namespace ybe
