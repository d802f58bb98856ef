#include "ybe/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
  return names;
}

std::string pair_text(const std::vector<std::string>& names, Pair p) {
  return names[p.first] + names[p.second];
}

}  // namespace

Presentation::Presentation(std::size_t n, std::vector<Index> ordering, std::vector<Rule> rules,
                           std::vector<std::string> names)
    : n_(n), ordering_(std::move(ordering)), rules_(std::move(rules)), names_(std::move(names)) {
  if (n_ == 0) throw ValidationError("a presentation needs at least one generator");
  if (ordering_.size() != n_) throw ValidationError("ordering must list every generator");
  rank_.assign(n_, 0);
  std::vector<bool> seen(n_, false);
  for (Index k = 0; k < n_; ++k) {
    Index g = ordering_[k];
    if (g >= n_ || seen[g]) throw ValidationError("ordering is not a permutation");
    seen[g] = true;
    rank_[g] = k;
  }
  if (names_.empty()) names_ = default_names(n_);
  if (names_.size() != n_) throw ValidationError("need exactly n names");

  lookup_.assign(n_ * n_, -1);
  std::vector<bool> used(n_ * n_, false);
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const Rule& r = rules_[k];
    for (Pair w : {r.lhs, r.rhs}) {
      if (w.first >= n_ || w.second >= n_) throw ValidationError("rule generator out of range");
      if (used[w.first * n_ + w.second]) {
        throw ValidationError("word " + pair_text(names_, w) + " occurs in more than one rule side");
      }
      used[w.first * n_ + w.second] = true;
    }
    if (!less({r.rhs.first, r.rhs.second}, {r.lhs.first, r.lhs.second})) {
      throw ValidationError("rule " + pair_text(names_, r.lhs) + " -> " + pair_text(names_, r.rhs) +
                            " does not decrease the deg-lex order");
    }
    if (r.coeff == 0) throw ValidationError("rule coefficients must be nonzero");
    lookup_[r.lhs.first * n_ + r.lhs.second] = static_cast<int>(k);
  }

  const std::size_t expected = n_ * (n_ - 1) / 2;
  if (rules_.size() != expected) {
    skew_violations_.push_back("expected " + std::to_string(expected) + " rules, found " +
                               std::to_string(rules_.size()));
  }
  for (const Rule& r : rules_) {
    auto j = rank_[r.lhs.first], i = rank_[r.lhs.second];
    auto i2 = rank_[r.rhs.first], j2 = rank_[r.rhs.second];
    std::string text = pair_text(names_, r.lhs) + " -> " + pair_text(names_, r.rhs);
    if (!(j > i)) skew_violations_.push_back(text + ": LHS is not descending");
    if (!(i2 < j2)) skew_violations_.push_back(text + ": RHS is not ascending");
    if (!(j > i2)) skew_violations_.push_back(text + ": leading letter does not drop");
  }

  groebner_ = check_groebner(*this);
}

const Rule* Presentation::rule_for(Index a, Index b) const {
  int k = lookup_[a * n_ + b];
  return k < 0 ? nullptr : &rules_[static_cast<std::size_t>(k)];
}

Presentation Presentation::with_coefficients(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != rules_.size()) throw ValidationError("one coefficient per rule");
  auto rules = rules_;
  for (std::size_t k = 0; k < rules.size(); ++k) rules[k].coeff = coeffs[k];
  return Presentation(n_, ordering_, std::move(rules), names_);
}

bool Presentation::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return rank_[a[k]] < rank_[b[k]];
  }
  return false;
}

Reduction reduce(const Presentation& p, Word w) {
  Reduction out;
  const std::size_t d = w.size();
  const std::size_t n = p.size();
  // Sanity ceiling; every rewrite lowers the deg-lex rank, so a correct
  // presentation never gets close.
  const std::size_t ceiling = d * d * n * n + 16;
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    const Rule* r = p.rule_for(w[i], w[i + 1]);
    if (!r) {
      ++i;
      continue;
    }
    w[i] = r->rhs.first;
    w[i + 1] = r->rhs.second;
    out.coeff *= r->coeff;
    if (++out.steps > ceiling) {
      throw Falsification("reduction exceeded the step ceiling", {});
    }
    i = i == 0 ? 0 : i - 1;
  }
  out.word = std::move(w);
  return out;
}

std::vector<std::pair<Word, Rational>> all_reducts(const Presentation& p, const Word& w) {
  std::set<std::pair<Word, Rational>> visited;
  std::set<std::pair<Word, Rational>> leaves;
  std::vector<std::pair<Word, Rational>> stack{{w, Rational(1)}};
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(cur).second) continue;
    bool irreducible = true;
    for (std::size_t i = 0; i + 1 < cur.first.size(); ++i) {
      const Rule* r = p.rule_for(cur.first[i], cur.first[i + 1]);
      if (!r) continue;
      irreducible = false;
      Word next = cur.first;
      next[i] = r->rhs.first;
      next[i + 1] = r->rhs.second;
      stack.emplace_back(std::move(next), cur.second * r->coeff);
    }
    if (irreducible) leaves.insert(cur);
  }
  return {leaves.begin(), leaves.end()};
}

GroebnerReport check_groebner(const Presentation& p) {
  GroebnerReport rep;
  const std::size_t n = p.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Rule* ab = p.rule_for(a, b);
      if (!ab) continue;
      for (Index c = 0; c < n; ++c) {
        const Rule* bc = p.rule_for(b, c);
        if (!bc) continue;
        ++rep.overlaps_checked;
        auto left = reduce(p, {ab->rhs.first, ab->rhs.second, c});
        left.coeff *= ab->coeff;
        auto right = reduce(p, {a, bc->rhs.first, bc->rhs.second});
        right.coeff *= bc->coeff;
        if (left.word != right.word || left.coeff != right.coeff) {
          if (rep.ok) {
            rep.ok = false;
            rep.failing_overlap = Word{a, b, c};
            rep.left_reduct = left.word;
            rep.left_coeff = left.coeff;
            rep.right_reduct = right.word;
            rep.right_coeff = right.coeff;
          }
        }
      }
    }
  return rep;
}

NormalForm normal_form(const Presentation& p, const Word& w) {
  if (!p.is_skew()) throw ContractViolation("normal_form needs a skew-type presentation");
  if (!p.is_groebner()) throw ContractViolation("normal_form needs a Groebner presentation");
  auto red = reduce(p, w);
  NormalForm nf{ExponentVector(p.size(), 0), red.coeff};
  for (std::size_t k = 0; k + 1 < red.word.size(); ++k) {
    if (p.rank(red.word[k]) > p.rank(red.word[k + 1])) {
      throw Falsification("irreducible word is not ordered", {});
    }
  }
  for (Index g : red.word) ++nf.exponents[g];
  return nf;
}

Word ordered_word(const Presentation& p, const ExponentVector& e) {
  Word w;
  for (Index g : p.ordering()) w.insert(w.end(), e[g], g);
  return w;
}

std::string format_monomial(const Presentation& p, const ExponentVector& e) {
  std::string out;
  for (Index g : p.ordering()) {
    if (e[g] == 0) continue;
    if (!out.empty()) out += ' ';
    out += p.names()[g];
    if (e[g] > 1) out += "^" + std::to_string(e[g]);
  }
  return out.empty() ? "1" : out;
}

Presentation relations_of(const SolutionMap& s, std::vector<Index> ordering) {
  const std::size_t n = s.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (s(s(x, y)) != Pair{x, y}) {
        throw ValidationError("relations_of needs an involutive map; r^2 moves (" +
                              std::to_string(x + 1) + "," + std::to_string(y + 1) + ")");
      }
  if (ordering.size() != n) throw ValidationError("ordering must list every generator");
  std::vector<Index> rank(n);
  for (Index k = 0; k < n; ++k) {
    if (ordering[k] >= n) throw ValidationError("ordering is not a permutation");
    rank[ordering[k]] = k;
  }
  auto greater = [&](Pair u, Pair v) {
    if (u.first != v.first) return rank[u.first] > rank[v.first];
    return rank[u.second] > rank[v.second];
  };
  std::vector<Rule> rules;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Pair u{x, y}, v = s(x, y);
      if (u != v && greater(u, v)) rules.push_back({u, v, Rational(1)});
    }
  // List rules by LHS in rank order so output is stable across orderings.
  std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) {
    return greater(b.lhs, a.lhs);
  });
  return Presentation(n, std::move(ordering), std::move(rules), s.names());
}

Presentation relations_of(const SolutionMap& s) {
  std::vector<Index> natural(s.size());
  std::iota(natural.begin(), natural.end(), Index{0});
  return relations_of(s, std::move(natural));
}

SolutionMap solution_of(const Presentation& p) {
  const std::size_t n = p.size();
  std::vector<Pair> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x * n + y] = {x, y};
  for (const Rule& r : p.rules()) {
    t[r.lhs.first * n + r.lhs.second] = r.rhs;
    t[r.rhs.first * n + r.rhs.second] = r.lhs;
  }
  return SolutionMap(n, std::move(t), p.names());
}

std::uint64_t count_normal_monomials(const Presentation& p, unsigned d) {
  const std::size_t n = p.size();
  if (d == 0) return 1;
  std::vector<std::uint64_t> cur(n, 1), next(n);
  for (unsigned len = 2; len <= d; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (!p.rule_for(a, b)) next[b] += cur[a];
    cur.swap(next);
  }
  return std::accumulate(cur.begin(), cur.end(), std::uint64_t{0});
}

std::uint64_t count_normal_forms_exhaustive(const Presentation& p, unsigned d) {
  if (!p.is_groebner()) throw ContractViolation("exhaustive count needs a Groebner presentation");
  const std::size_t n = p.size();
  std::set<Word> forms;
  Word w(d, 0);
  std::uint64_t total = 1;
  for (unsigned k = 0; k < d; ++k) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned k = 0; k < d; ++k) {
      w[d - 1 - k] = static_cast<Index>(c % n);
      c /= n;
    }
    forms.insert(reduce(p, w).word);
  }
  return forms.size();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<ExponentVector> exponent_vectors(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      cur[pos] = k;
      fill(pos + 1, left - k);
    }
    cur[pos] = 0;
  };
  if (n > 0) fill(0, d);
  return out;
}

CentralityReport check_centrality(const Presentation& p, unsigned M) {
  CentralityReport rep;
  const std::size_t n = p.size();
  auto power = [&](Index g) { return Word(M, g); };
  auto cat = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (Index i = 0; i < n && rep.powers_commute; ++i)
    for (Index j = i + 1; j < n; ++j) {
      if (normal_form(p, cat(power(i), power(j))) != normal_form(p, cat(power(j), power(i)))) {
        rep.powers_commute = false;
        rep.powers_witness = Pair{i, j};
        break;
      }
    }
  auto key = [](const NormalForm& f) { return std::make_pair(f.exponents, to_string(f.coeff)); };
  for (Index j = 0; j < n; ++j) {
    std::vector<std::pair<ExponentVector, std::string>> left, right;
    for (Index i = 0; i < n; ++i) {
      left.push_back(key(normal_form(p, cat(power(i), {j}))));
      right.push_back(key(normal_form(p, cat({j}, power(i)))));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) {
      rep.power_sum_central = false;
      rep.power_sum_witness = j;
      break;
    }
  }
  return rep;
}

std::vector<Index> decomposition_ordering(const SolutionMap& s) {
  std::function<std::vector<Index>(const std::vector<Index>&)> order =
      [&](const std::vector<Index>& block) -> std::vector<Index> {
    if (block.size() <= 1) return block;
    // Orbits of the group generated by L_x, x in block, acting on block.
    std::vector<Index> comp(s.size(), 0);
    std::vector<bool> in_block(s.size(), false);
    for (Index y : block) in_block[y] = true;
    std::vector<std::vector<Index>> orbits;
    std::vector<bool> done(s.size(), false);
    for (Index start : block) {
      if (done[start]) continue;
      std::vector<Index> orbit{start};
      done[start] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (Index x : block) {
          Index img = s(x, orbit[k]).first;
          if (in_block[img] && !done[img]) {
            done[img] = true;
            orbit.push_back(img);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
    if (orbits.size() == 1) return orbits.front();
    std::vector<Index> out;
    for (const auto& o : orbits) {
      auto sub = order(o);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  };
  std::vector<Index> all(s.size());
  std::iota(all.begin(), all.end(), Index{0});
  return order(all);
}

OrderingSearch find_skew_ordering(const SolutionMap& s, std::size_t exhaustive_bound) {
  OrderingSearch out;
  const std::size_t n = s.size();
  auto describe = [&](const std::vector<Index>& ord) {
    std::string t;
    for (std::size_t k = 0; k < ord.size(); ++k) {
      if (k > 0) t += " < ";
      t += s.name(ord[k]);
    }
    return t;
  };
  auto certify = [&](const std::vector<Index>& ord, const std::string& strategy) {
    Presentation p = relations_of(s, ord);
    bool ok = p.is_skew() && p.is_groebner();
    out.trace.push_back(strategy + ": " + describe(ord) + " -> " +
                        (ok ? "certified"
                            : (!p.is_skew() ? "not skew (" + p.skew_violations().front() + ")"
                                            : std::string("overlap check failed"))));
    if (ok) {
      out.ordering = ord;
      out.strategy = strategy;
    }
    return ok;
  };
  try {
    std::vector<Index> natural(n);
    std::iota(natural.begin(), natural.end(), Index{0});
    if (certify(natural, "natural")) return out;
    auto dec = decomposition_ordering(s);
    if (dec != natural && certify(dec, "decomposition")) return out;
    if (n <= exhaustive_bound) {
      std::vector<Index> ord = natural;
      while (std::next_permutation(ord.begin(), ord.end())) {
        if (ord == dec) continue;
        Presentation p = relations_of(s, ord);
        if (p.is_skew() && p.is_groebner()) {
          out.trace.push_back("exhaustive: " + describe(ord) + " -> certified");
          out.ordering = ord;
          out.strategy = "exhaustive";
          return out;
        }
      }
      out.trace.push_back("exhaustive: all " + std::to_string(n) + "! orderings rejected");
    } else {
      out.trace.push_back("exhaustive: skipped, n exceeds bound " + std::to_string(exhaustive_bound));
    }
  } catch (const ValidationError& e) {
    out.trace.push_back(std::string("rejected input: ") + e.what());
  }
  out.strategy = "none";
  return out;
}

}  // namespace ybe
