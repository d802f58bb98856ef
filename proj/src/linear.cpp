#include "ybe/linear.hpp"

#include "ybe/errors.hpp"
#include "ybe/io.hpp"

namespace ybe {

namespace {

std::string pair_text(const SolutionMap& s, Pair u) { return s.name(u.first) + s.name(u.second); }

// Applies a pair map to positions (i, j) of a triple term.
template <class F>
Term<Triple> act(const F& f, Term<Triple> t, int i, int j) {
  Term<Pair> img = f(Pair{t.basis[i], t.basis[j]});
  t.coeff *= img.coeff;
  t.basis[i] = img.basis.first;
  t.basis[j] = img.basis.second;
  return t;
}

}  // namespace

BinomialLinearMap::BinomialLinearMap(SolutionMap r, const std::map<Pair, Rational>& coeffs)
    : r_(std::move(r)), coeffs_(r_.size() * r_.size(), Rational(1)) {
  const std::size_t n = r_.size();
  for (const auto& [u, c] : coeffs) {
    if (u.first >= n || u.second >= n) throw ValidationError("coefficient pair out of range");
    if (c == 0) throw ValidationError("coefficient of " + pair_text(r_, u) + " is zero");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Pair u{a, b};
      Pair v = r_(u);
      auto it = coeffs.find(u);
      if (v == u) {
        if (it != coeffs.end() && it->second != 1) {
          throw ValidationError("fixed pair " + pair_text(r_, u) + " must carry coefficient 1");
        }
        continue;
      }
      bool two_cycle = r_(v) == u;
      auto jt = coeffs.find(v);
      if (it != coeffs.end()) {
        coeffs_[a * n + b] = it->second;
        if (two_cycle && jt != coeffs.end() && it->second * jt->second != 1) {
          throw ValidationError("coefficients of " + pair_text(r_, u) + " and " +
                                pair_text(r_, v) + " are not reciprocal");
        }
      } else if (two_cycle && jt != coeffs.end()) {
        coeffs_[a * n + b] = 1 / jt->second;
      }
    }
}

BinomialLinearMap BinomialLinearMap::from_presentation(const Presentation& p) {
  std::map<Pair, Rational> coeffs;
  for (const Rule& r : p.rules()) {
    coeffs[r.lhs] = r.coeff;
    coeffs[r.rhs] = 1 / r.coeff;
  }
  return BinomialLinearMap(solution_of(p), coeffs);
}

LinearYbeReport check_linear_ybe(const BinomialLinearMap& R) {
  const std::size_t n = R.map().size();
  auto f = [&](Pair u) { return R.apply(u); };
  LinearYbeReport rep;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        ++rep.triples_checked;
        Term<Triple> t{Rational(1), {a, b, c}};
        auto lhs = act(f, act(f, act(f, t, 0, 1), 1, 2), 0, 1);
        auto rhs = act(f, act(f, act(f, t, 1, 2), 0, 1), 1, 2);
        if (lhs != rhs && rep.ok) {
          rep.ok = false;
          rep.witness = t.basis;
          rep.lhs = lhs;
          rep.rhs = rhs;
        }
      }
  return rep;
}

QybeReport check_qybe_unitarity(const BinomialLinearMap& R) {
  const std::size_t n = R.map().size();
  // R' = flip o R.
  auto rp = [&](Pair u) {
    Term<Pair> t = R.apply(u);
    std::swap(t.basis.first, t.basis.second);
    return t;
  };
  QybeReport rep;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Term<Triple> t{Rational(1), {a, b, c}};
        auto lhs = act(rp, act(rp, act(rp, t, 1, 2), 0, 2), 0, 1);
        auto rhs = act(rp, act(rp, act(rp, t, 0, 1), 0, 2), 1, 2);
        if (lhs != rhs && rep.qybe) {
          rep.qybe = false;
          rep.qybe_witness = t.basis;
        }
      }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Term<Pair> t = rp({a, b});
      // R^21 = flip R' flip.
      Term<Pair> back = rp({t.basis.second, t.basis.first});
      Term<Pair> out{t.coeff * back.coeff, {back.basis.second, back.basis.first}};
      if ((out.coeff != 1 || out.basis != Pair{a, b}) && rep.unitarity) {
        rep.unitarity = false;
        rep.unitarity_witness = Pair{a, b};
        rep.unitarity_image = out;
      }
    }
  return rep;
}

CoeffGroebnerReport coeff_groebner_check(const Presentation& p) {
  if (!p.is_skew()) throw ContractViolation("coefficient overlap check needs skew-polynomial shape");
  const std::size_t n = p.size();
  const auto& ord = p.ordering();
  CoeffGroebnerReport rep;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        Word w{ord[k], ord[j], ord[i]};
        ++rep.overlaps_checked;
        auto reducts = all_reducts(p, w);
        bool ordered = reducts.size() == 1 && p.rank(reducts[0].first[0]) < p.rank(reducts[0].first[1]) &&
                       p.rank(reducts[0].first[1]) < p.rank(reducts[0].first[2]);
        if (ordered) {
          rep.alpha[w] = reducts[0].second;
        } else if (rep.ok) {
          rep.ok = false;
          rep.failing_overlap = w;
          rep.reducts = std::move(reducts);
        }
      }
  return rep;
}

SkewLemmaReport skew_lemma_roundtrip(const Presentation& p) {
  SkewLemmaReport rep;
  rep.ybe = check_linear_ybe(BinomialLinearMap::from_presentation(p));
  rep.groebner = coeff_groebner_check(p);
  rep.agree = rep.ybe.ok == rep.groebner.ok;
  if (!rep.agree) {
    SolutionMap s = solution_of(p);
    rep.trace.push_back(std::string("linear YBE: ") + (rep.ybe.ok ? "holds" : "fails"));
    if (rep.ybe.witness) {
      rep.trace.push_back("YBE witness " + format_triple(s, *rep.ybe.witness) + ": " +
                          to_string(rep.ybe.lhs.coeff) + " " + format_triple(s, rep.ybe.lhs.basis) +
                          " vs " + to_string(rep.ybe.rhs.coeff) + " " +
                          format_triple(s, rep.ybe.rhs.basis));
    }
    rep.trace.push_back(std::string("coefficient Groebner: ") + (rep.groebner.ok ? "holds" : "fails"));
    if (rep.groebner.failing_overlap) {
      std::string line = "overlap " + format_word(s, *rep.groebner.failing_overlap) + " ->";
      for (const auto& [w, c] : rep.groebner.reducts) line += " " + to_string(c) + " " + format_word(s, w) + ";";
      rep.trace.push_back(line);
    }
  }
  return rep;
}

std::vector<Rational> random_coefficients(std::size_t count, std::mt19937_64& rng, int max_abs) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs - 1), den(1, max_abs);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    int a = num(rng);
    if (a >= 0) ++a;  // skip zero
    out.emplace_back(a, den(rng));
  }
  return out;
}

std::string format_triple(const SolutionMap& s, const Triple& t) {
  return format_word(s, {t[0], t[1], t[2]});
}

}  // namespace ybe
