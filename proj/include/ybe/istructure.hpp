#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ybe/actions.hpp"
#include "ybe/rewrite.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// Monomials of the free abelian monoid on u_1..u_n and elements of S
/// share the ExponentVector representation; S-elements are always normal
/// forms under the presentation's ordering.
using UMonomial = ExponentVector;

/// Left and right I-structures v, v_1 of S(X, r) for a square-free
/// solution, tabulated on every monomial up to the degree bound. Built
/// layer by layer at construction; read-only afterwards.
class IStructure {
 public:
  /// `p` must be a skew-type Groebner presentation of `s`.
  IStructure(const SolutionMap& s, const Presentation& p, unsigned degree_bound = 6);

  unsigned degree_bound() const noexcept { return bound_; }
  const Presentation& presentation() const noexcept { return p_; }

  /// v(a); peels the lowest-index u_i: v(u_i b) = x v(b) with x the
  /// unique generator carried to x_i by the right action of v(b).
  const ExponentVector& left(const UMonomial& a) const;
  /// v_1(a); peels the lowest-index u_i: v_1(b u_i) = v_1(b) x with
  /// x = (L_{y_1} ... L_{y_d})^{-1}(x_i) for v_1(b) = y_1 ... y_d.
  const ExponentVector& right(const UMonomial& a) const;

  /// v(a) computed by peeling each u_i occurring in a first (one result
  /// per such i, lower layers from the table).
  std::vector<ExponentVector> left_all_peelings(const UMonomial& a) const;
  std::vector<ExponentVector> right_all_peelings(const UMonomial& a) const;

  /// Inverses, computed straight from a word: pi'(x w) = u_{x^w} pi'(w)
  /// and pi(w x) = pi(w) u_{lambda_w(x)}.
  UMonomial left_preimage_word(const Word& w) const;
  UMonomial right_preimage_word(const Word& w) const;
  UMonomial left_preimage(const ExponentVector& w) const;
  UMonomial right_preimage(const ExponentVector& w) const;

  /// Join and meet of (S, |_l) transported from the divisibility lattice
  /// of the free abelian monoid.
  ExponentVector lcm_left(const ExponentVector& a, const ExponentVector& b) const;
  ExponentVector gcd_left(const ExponentVector& a, const ExponentVector& b) const;
  ExponentVector lcm_right(const ExponentVector& a, const ExponentVector& b) const;

 private:
  ExponentVector peel_left(const UMonomial& a, Index i) const;
  ExponentVector peel_right(const UMonomial& a, Index i) const;

  SolutionMap s_;
  Presentation p_;
  ActionTable actions_;
  unsigned bound_;
  std::map<UMonomial, ExponentVector> left_;
  std::map<UMonomial, ExponentVector> right_;
};

struct IStructureAudit {
  bool set_equality = true;  // {v(u_i b)} = {x v(b)} for every b
  bool exchange = true;      // x_{u_j b,i} x_{b,j} = x_{u_i b,j} x_{b,i} in S
  bool bijective = true;     // each degree layer maps onto the normal monomials
  bool peeling_independent = true;
  bool preimage_consistent = true;  // v(pi'(w)) = w on normal monomials
  std::optional<std::string> witness;
  bool ok() const noexcept {
    return set_equality && exchange && bijective && peeling_independent && preimage_consistent;
  }
};

/// Checks the defining conditions of left and right I-structures on all
/// monomials of degree < max_degree (the exchange relation where the
/// table reaches degree + 2) and bijectivity for degree <= max_degree.
IStructureAudit audit_istructure(const IStructure& is, unsigned max_degree);

/// a |_l w: w = c a for some c in S. Brute force over normal monomials c.
bool left_divides(const Presentation& p, const ExponentVector& a, const ExponentVector& w);
bool right_divides(const Presentation& p, const ExponentVector& a, const ExponentVector& w);

/// Common left multiples of least degree, found by scanning normal
/// monomials degree by degree up to max_degree.
std::vector<ExponentVector> minimal_common_left_multiples(const Presentation& p,
                                                          const ExponentVector& a,
                                                          const ExponentVector& b,
                                                          unsigned max_degree);

struct HeadsTails {
  std::set<Index> heads;
  std::set<Index> tails;
};

/// Generators h, t with w = h w' and w = w'' t in S.
HeadsTails heads_tails(const Presentation& p, const ExponentVector& w);

unsigned degree(const ExponentVector& e);

}  // namespace ybe
