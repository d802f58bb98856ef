#include "ybe/istructure.hpp"

#include <algorithm>
#include <numeric>

#include "ybe/errors.hpp"

namespace ybe {

unsigned degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0u); }

namespace {

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string show(const ExponentVector& e) {
  std::string out = "(";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(e[k]);
  }
  return out + ")";
}

}  // namespace

IStructure::IStructure(const SolutionMap& s, const Presentation& p, unsigned degree_bound)
    : s_(s), p_(p), actions_(compute_actions(s)), bound_(degree_bound) {
  if (p_.size() != s_.size()) throw ValidationError("presentation and solution differ in size");
  if (!p_.is_skew() || !p_.is_groebner()) {
    throw ContractViolation("I-structures need a certified skew-type presentation");
  }
  const std::size_t n = s_.size();
  UMonomial one(n, 0);
  left_[one] = one;
  right_[one] = one;
  for (unsigned d = 1; d <= bound_; ++d) {
    for (const auto& a : exponent_vectors(n, d)) {
      Index i = 0;
      while (a[i] == 0) ++i;
      left_[a] = peel_left(a, i);
      right_[a] = peel_right(a, i);
    }
  }
}

ExponentVector IStructure::peel_left(const UMonomial& a, Index i) const {
  UMonomial b = a;
  --b[i];
  Word w = ordered_word(p_, left_.at(b));
  // The x with x^w = x_i: undo R_{y_d}, ..., R_{y_1}.
  Index x = i;
  for (std::size_t k = w.size(); k-- > 0;) x = actions_.right[w[k]].inverse()(x);
  return normal_form(p_, cat({x}, w)).exponents;
}

ExponentVector IStructure::peel_right(const UMonomial& a, Index i) const {
  UMonomial b = a;
  --b[i];
  Word w = ordered_word(p_, right_.at(b));
  // lambda_w^{-1}(x_i) = L_{y_d}^{-1} ... L_{y_1}^{-1}(x_i).
  Index x = i;
  for (Index y : w) x = actions_.left[y].inverse()(x);
  return normal_form(p_, cat(w, {x})).exponents;
}

const ExponentVector& IStructure::left(const UMonomial& a) const {
  if (a.size() != s_.size()) throw ValidationError("monomial has the wrong number of variables");
  if (degree(a) > bound_) {
    throw BoundExceeded("degree " + std::to_string(degree(a)) + " exceeds I-structure bound " +
                        std::to_string(bound_));
  }
  return left_.at(a);
}

const ExponentVector& IStructure::right(const UMonomial& a) const {
  if (a.size() != s_.size()) throw ValidationError("monomial has the wrong number of variables");
  if (degree(a) > bound_) {
    throw BoundExceeded("degree " + std::to_string(degree(a)) + " exceeds I-structure bound " +
                        std::to_string(bound_));
  }
  return right_.at(a);
}

std::vector<ExponentVector> IStructure::left_all_peelings(const UMonomial& a) const {
  left(a);
  std::vector<ExponentVector> out;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] > 0) out.push_back(peel_left(a, i));
  return out;
}

std::vector<ExponentVector> IStructure::right_all_peelings(const UMonomial& a) const {
  right(a);
  std::vector<ExponentVector> out;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] > 0) out.push_back(peel_right(a, i));
  return out;
}

UMonomial IStructure::left_preimage_word(const Word& w) const {
  UMonomial out(s_.size(), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    Index x = w[k];
    for (std::size_t m = k + 1; m < w.size(); ++m) x = actions_.right[w[m]](x);
    ++out[x];
  }
  return out;
}

UMonomial IStructure::right_preimage_word(const Word& w) const {
  UMonomial out(s_.size(), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    Index x = w[k];
    for (std::size_t m = k; m-- > 0;) x = actions_.left[w[m]](x);
    ++out[x];
  }
  return out;
}

UMonomial IStructure::left_preimage(const ExponentVector& w) const {
  return left_preimage_word(ordered_word(p_, w));
}

UMonomial IStructure::right_preimage(const ExponentVector& w) const {
  return right_preimage_word(ordered_word(p_, w));
}

ExponentVector IStructure::lcm_left(const ExponentVector& a, const ExponentVector& b) const {
  auto pa = left_preimage(a), pb = left_preimage(b);
  for (std::size_t k = 0; k < pa.size(); ++k) pa[k] = std::max(pa[k], pb[k]);
  return left(pa);
}

ExponentVector IStructure::gcd_left(const ExponentVector& a, const ExponentVector& b) const {
  auto pa = left_preimage(a), pb = left_preimage(b);
  for (std::size_t k = 0; k < pa.size(); ++k) pa[k] = std::min(pa[k], pb[k]);
  return left(pa);
}

ExponentVector IStructure::lcm_right(const ExponentVector& a, const ExponentVector& b) const {
  auto pa = right_preimage(a), pb = right_preimage(b);
  for (std::size_t k = 0; k < pa.size(); ++k) pa[k] = std::max(pa[k], pb[k]);
  return right(pa);
}

IStructureAudit audit_istructure(const IStructure& is, unsigned max_degree) {
  if (max_degree > is.degree_bound()) {
    throw BoundExceeded("audit degree exceeds the I-structure bound");
  }
  const Presentation& p = is.presentation();
  const std::size_t n = p.size();
  IStructureAudit rep;
  auto fail = [&](bool& flag, const std::string& msg) {
    if (!rep.witness) rep.witness = msg;
    flag = false;
  };
  auto nf = [&](const Word& w) { return normal_form(p, w).exponents; };

  for (unsigned d = 0; d <= max_degree; ++d) {
    auto layer = exponent_vectors(n, d);
    std::set<ExponentVector> left_images, right_images;
    for (const auto& a : layer) {
      left_images.insert(is.left(a));
      right_images.insert(is.right(a));
      if (d > 0) {
        for (const auto& v : is.left_all_peelings(a))
          if (v != is.left(a)) fail(rep.peeling_independent, "left peeling differs at " + show(a));
        for (const auto& v : is.right_all_peelings(a))
          if (v != is.right(a)) fail(rep.peeling_independent, "right peeling differs at " + show(a));
      }
      if (is.left(is.left_preimage(a)) != a || is.right(is.right_preimage(a)) != a) {
        fail(rep.preimage_consistent, "preimage does not invert at " + show(a));
      }
    }
    if (left_images.size() != layer.size() || right_images.size() != layer.size()) {
      fail(rep.bijective, "degree " + std::to_string(d) + " layer is not bijective");
    }
    if (d == max_degree) break;

    for (const auto& b : layer) {
      Word vb = ordered_word(p, is.left(b));
      Word v1b = ordered_word(p, is.right(b));
      auto up = [&](const UMonomial& m, Index i) {
        UMonomial c = m;
        ++c[i];
        return c;
      };
      // x_{b,i}: the generator with x v(b) = v(u_i b); found by search.
      auto left_letter = [&](const UMonomial& m, Index i) -> std::optional<Index> {
        Word vm = ordered_word(p, is.left(m));
        for (Index x = 0; x < n; ++x)
          if (nf(cat({x}, vm)) == is.left(up(m, i))) return x;
        return std::nullopt;
      };
      auto right_letter = [&](const UMonomial& m, Index i) -> std::optional<Index> {
        Word vm = ordered_word(p, is.right(m));
        for (Index x = 0; x < n; ++x)
          if (nf(cat(vm, {x})) == is.right(up(m, i))) return x;
        return std::nullopt;
      };

      std::set<ExponentVector> lhs, rhs, lhs1, rhs1;
      for (Index i = 0; i < n; ++i) {
        lhs.insert(is.left(up(b, i)));
        rhs.insert(nf(cat({i}, vb)));
        lhs1.insert(is.right(up(b, i)));
        rhs1.insert(nf(cat(v1b, {i})));
      }
      if (lhs != rhs) fail(rep.set_equality, "left set equality fails at " + show(b));
      if (lhs1 != rhs1) fail(rep.set_equality, "right set equality fails at " + show(b));
      if (!rep.set_equality || d + 2 > is.degree_bound()) continue;

      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
          auto a1 = left_letter(up(b, j), i), a2 = left_letter(b, j);
          auto b1 = left_letter(up(b, i), j), b2 = left_letter(b, i);
          if (!a1 || !a2 || !b1 || !b2 || nf({*a1, *a2}) != nf({*b1, *b2})) {
            fail(rep.exchange, "left exchange relation fails at " + show(b));
          }
          auto c1 = right_letter(b, j), c2 = right_letter(up(b, j), i);
          auto d1 = right_letter(b, i), d2 = right_letter(up(b, i), j);
          if (!c1 || !c2 || !d1 || !d2 || nf({*c1, *c2}) != nf({*d1, *d2})) {
            fail(rep.exchange, "right exchange relation fails at " + show(b));
          }
        }
    }
  }
  return rep;
}

bool left_divides(const Presentation& p, const ExponentVector& a, const ExponentVector& w) {
  unsigned da = degree(a), dw = degree(w);
  if (da > dw) return false;
  Word wa = ordered_word(p, a);
  for (const auto& c : exponent_vectors(p.size(), dw - da)) {
    if (normal_form(p, cat(ordered_word(p, c), wa)).exponents == w) return true;
  }
  return false;
}

bool right_divides(const Presentation& p, const ExponentVector& a, const ExponentVector& w) {
  unsigned da = degree(a), dw = degree(w);
  if (da > dw) return false;
  Word wa = ordered_word(p, a);
  for (const auto& c : exponent_vectors(p.size(), dw - da)) {
    if (normal_form(p, cat(wa, ordered_word(p, c))).exponents == w) return true;
  }
  return false;
}

std::vector<ExponentVector> minimal_common_left_multiples(const Presentation& p,
                                                          const ExponentVector& a,
                                                          const ExponentVector& b,
                                                          unsigned max_degree) {
  for (unsigned d = std::max(degree(a), degree(b)); d <= max_degree; ++d) {
    std::vector<ExponentVector> found;
    for (const auto& w : exponent_vectors(p.size(), d))
      if (left_divides(p, a, w) && left_divides(p, b, w)) found.push_back(w);
    if (!found.empty()) return found;
  }
  return {};
}

HeadsTails heads_tails(const Presentation& p, const ExponentVector& w) {
  HeadsTails out;
  unsigned d = degree(w);
  if (d == 0) return out;
  for (const auto& c : exponent_vectors(p.size(), d - 1)) {
    Word wc = ordered_word(p, c);
    for (Index g = 0; g < p.size(); ++g) {
      if (normal_form(p, cat({g}, wc)).exponents == w) out.heads.insert(g);
      if (normal_form(p, cat(wc, {g})).exponents == w) out.tails.insert(g);
    }
  }
  return out;
}

}  // namespace ybe
