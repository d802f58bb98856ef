#include "ybe/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ybe/actions.hpp"
#include "ybe/errors.hpp"

namespace ybe {

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                              std::size_t bound) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& p : generators) {
    if (p.size() != degree) throw ValidationError("generator acts on the wrong number of points");
  }
  g.generators_ = std::move(generators);
  Permutation id = Permutation::identity(degree);
  g.members_.insert(id);
  g.elements_.push_back(id);
  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (const auto& gen : g.generators_) {
      Permutation next = gen * g.elements_[k];
      if (g.members_.insert(next).second) {
        g.elements_.push_back(std::move(next));
        if (g.elements_.size() > bound) {
          throw BoundExceeded("group closure exceeded " + std::to_string(bound) + " elements (" +
                              std::to_string(g.generators_.size()) +
                              " generators, order at least " +
                              std::to_string(g.elements_.size()) + ")");
        }
      }
    }
  }
  return g;
}

PermGroup permutation_group_L(const SolutionMap& s, std::size_t bound) {
  auto actions = compute_actions(s);
  return PermGroup::generate(s.size(), actions.left, bound);
}

bool is_r_invariant(const SolutionMap& s, const std::vector<Index>& subset) {
  std::vector<bool> in(s.size(), false);
  for (Index x : subset) in[x] = true;
  for (Index x : subset)
    for (Index y : subset) {
      Pair p = s(x, y);
      if (!in[p.first] || !in[p.second]) return false;
    }
  return true;
}

std::vector<std::vector<Index>> orbits_left(const SolutionMap& s) {
  const std::size_t n = s.size();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Index>> orbits;
  for (Index start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<Index> orbit{start};
    done[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (Index x = 0; x < n; ++x) {
        Index img = s(x, orbit[k]).first;
        if (!done[img]) {
          done[img] = true;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    if (!is_r_invariant(s, orbit)) {
      throw Falsification("orbit of " + s.name(start) + " is not r-invariant", {});
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace {

PermGroup normal_closure(const PermGroup& ambient, std::vector<Permutation> gens) {
  PermGroup h = PermGroup::generate(ambient.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : ambient.generators()) {
      Permutation g_inv = g.inverse();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Permutation c = g * gens[k] * g_inv;
        if (!h.contains(c)) {
          gens.push_back(c);
          h = PermGroup::generate(ambient.degree(), gens);
          changed = true;
        }
      }
    }
  }
  return h;
}

}  // namespace

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (!series.back().is_trivial()) {
    const PermGroup& cur = series.back();
    std::vector<Permutation> comms;
    for (const auto& a : cur.generators())
      for (const auto& b : cur.generators()) {
        Permutation c = a.inverse() * b.inverse() * a * b;
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    PermGroup next = normal_closure(cur, std::move(comms));
    if (next.order() == cur.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

QuotientGroup::QuotientGroup(const SolutionMap& s, const Presentation& p, std::uint64_t bound)
    : p_(p) {
  if (!p_.is_skew() || !p_.is_groebner()) {
    throw ContractViolation("the quotient needs a certified skew-type presentation");
  }
  M_ = compute_actions(s).cyclic_degree;
  order_ = 1;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (order_ > bound / M_) {
      throw BoundExceeded("M^n exceeds the quotient bound " + std::to_string(bound));
    }
    order_ *= M_;
  }
}

std::uint64_t QuotientGroup::encode(const ExponentVector& e) const {
  std::uint64_t code = 0;
  for (unsigned a : e) code = code * M_ + a;
  return code;
}

ExponentVector QuotientGroup::decode(std::uint64_t code) const {
  ExponentVector e(p_.size());
  for (std::size_t k = e.size(); k-- > 0;) {
    e[k] = static_cast<unsigned>(code % M_);
    code /= M_;
  }
  return e;
}

ExponentVector QuotientGroup::identity() const { return ExponentVector(p_.size(), 0); }

ExponentVector QuotientGroup::image(const Word& w) const {
  auto e = normal_form(p_, w).exponents;
  // x_g^M generates a normal subgroup, so a block x_g^M may be deleted
  // wherever it sits in the ordered monomial.
  for (auto& a : e) a = static_cast<unsigned>(a % M_);
  return e;
}

ExponentVector QuotientGroup::multiply(const ExponentVector& a, const ExponentVector& b) const {
  Word w = ordered_word(p_, a);
  Word wb = ordered_word(p_, b);
  w.insert(w.end(), wb.begin(), wb.end());
  return image(w);
}

ExponentVector QuotientGroup::inverse(const ExponentVector& a) const {
  Word w = ordered_word(p_, a);
  Word inv;
  for (std::size_t k = w.size(); k-- > 0;) inv.insert(inv.end(), M_ - 1, w[k]);
  return image(inv);
}

GroupAxiomReport verify_group_axioms(const QuotientGroup& g, std::uint64_t seed,
                                     std::uint64_t samples) {
  GroupAxiomReport rep;
  const std::uint64_t N = g.order();
  const auto e = g.identity();
  auto fail = [&](bool& flag, const std::string& msg) {
    if (!rep.witness) rep.witness = msg;
    flag = false;
  };
  auto show = [&](std::uint64_t c) { return format_monomial(g.presentation(), g.decode(c)); };

  for (std::uint64_t a = 0; a < N; ++a) {
    auto ea = g.decode(a);
    if (g.multiply(e, ea) != ea || g.multiply(ea, e) != ea) {
      fail(rep.identity, "identity fails at " + show(a));
    }
    auto inv = g.inverse(ea);
    if (g.multiply(ea, inv) != e || g.multiply(inv, ea) != e) {
      fail(rep.inverses, "inverse fails at " + show(a));
    }
  }

  const bool full_table = N * N <= 4'000'000;
  std::vector<std::uint64_t> table;
  if (full_table) {
    table.resize(N * N);
    for (std::uint64_t a = 0; a < N; ++a)
      for (std::uint64_t b = 0; b < N; ++b)
        table[a * N + b] = g.encode(g.multiply(g.decode(a), g.decode(b)));
    for (std::uint64_t a = 0; a < N && rep.closure; ++a) {
      std::vector<bool> row(N, false), col(N, false);
      for (std::uint64_t b = 0; b < N; ++b) {
        auto r = table[a * N + b], c = table[b * N + a];
        if (row[r] || col[c]) {
          fail(rep.closure, "multiplication by " + show(a) + " is not a bijection");
          break;
        }
        row[r] = col[c] = true;
      }
    }
  }
  auto mul = [&](std::uint64_t a, std::uint64_t b) {
    return full_table ? table[a * N + b] : g.encode(g.multiply(g.decode(a), g.decode(b)));
  };
  auto check_triple = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    ++rep.triples_checked;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      fail(rep.associativity,
           "associativity fails at (" + show(a) + ", " + show(b) + ", " + show(c) + ")");
    }
  };
  if (N <= 215 && N * N * N <= 10'000'000) {
    rep.exhaustive_associativity = true;
    for (std::uint64_t a = 0; a < N; ++a)
      for (std::uint64_t b = 0; b < N; ++b)
        for (std::uint64_t c = 0; c < N; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, N - 1);
    for (std::uint64_t k = 0; k < samples; ++k) check_triple(pick(rng), pick(rng), pick(rng));
  }

  for (Index x = 0; x < g.presentation().size(); ++x) {
    if (g.image(Word(g.modulus(), x)) != e) {
      fail(rep.powers_trivial, g.presentation().names()[x] + "^M is not trivial");
    }
  }
  return rep;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned a = 0;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    if (a > 0) out.emplace_back(p, a);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

namespace {

bool is_power_of(std::uint64_t value, std::uint64_t p) {
  while (value > 1 && value % p == 0) value /= p;
  return value == 1;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

template <typename Elem, typename Set, typename Mul>
Set product_set(const Set& a, const Set& b, Mul mul) {
  Set out;
  for (const Elem& x : a)
    for (const Elem& y : b) out.insert(mul(x, y));
  return out;
}

}  // namespace

SylowReport sylow_decomposition(const SolutionMap& s, const Presentation* p,
                                std::uint64_t quotient_bound, std::size_t perm_bound) {
  SylowReport rep;
  auto actions = compute_actions(s);
  rep.M = actions.cyclic_degree;
  const std::size_t n = s.size();
  auto primes = factorize(rep.M);

  std::optional<QuotientGroup> quotient;
  if (p != nullptr) {
    try {
      quotient.emplace(s, *p, quotient_bound);
    } catch (const BoundExceeded&) {
      rep.notice = "M^n exceeds " + std::to_string(quotient_bound) + "; evaluated on G_L";
    }
  } else {
    rep.notice = "no certified presentation given; evaluated on G_L";
  }

  if (quotient) {
    rep.level = "quotient";
    const QuotientGroup& g = *quotient;
    rep.group_order = g.order();
    using CodeSet = std::set<std::uint64_t>;
    auto mul = [&](std::uint64_t a, std::uint64_t b) {
      return g.encode(g.multiply(g.decode(a), g.decode(b)));
    };
    std::vector<CodeSet> sets;
    for (auto [prime, alpha] : primes) {
      SylowPiece piece{prime, alpha, rep.M / ipow(prime, alpha), 0, ipow(prime, n * alpha)};
      std::vector<std::uint64_t> gens;
      for (Index j = 0; j < n; ++j) gens.push_back(g.encode(g.image(Word(piece.q, j))));
      CodeSet set{g.encode(g.identity())};
      std::vector<std::uint64_t> queue(set.begin(), set.end());
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (auto h : gens) {
          auto next = mul(queue[k], h);
          if (set.insert(next).second) queue.push_back(next);
        }
      piece.order = set.size();
      piece.prime_power = is_power_of(piece.order, prime);
      if (!piece.prime_power || piece.order != *piece.expected_order) rep.orders_ok = false;
      piece.normal = true;
      for (Index j = 0; j < n && piece.normal; ++j) {
        auto x = g.image({j});
        auto x_inv = g.inverse(x);
        for (auto h : set)
          if (!set.count(g.encode(g.multiply(g.multiply(x, g.decode(h)), x_inv)))) {
            piece.normal = false;
            break;
          }
      }
      rep.pieces.push_back(piece);
      sets.push_back(std::move(set));
    }
    for (std::size_t a = 0; a < sets.size(); ++a)
      for (std::size_t b = a + 1; b < sets.size(); ++b)
        if (product_set<std::uint64_t>(sets[a], sets[b], mul) !=
            product_set<std::uint64_t>(sets[b], sets[a], mul))
          rep.pairwise_commute = false;
    CodeSet all{g.encode(g.identity())};
    for (const auto& set : sets) all = product_set<std::uint64_t>(all, set, mul);
    rep.covers = all.size() == g.order();
  } else {
    rep.level = "G_L";
    PermGroup gl = PermGroup::generate(n, actions.left, perm_bound);
    rep.group_order = gl.order();
    using PermSet = std::unordered_set<Permutation, PermutationHash>;
    auto mul = [](const Permutation& a, const Permutation& b) { return a * b; };
    std::vector<PermSet> sets;
    for (auto [prime, alpha] : primes) {
      SylowPiece piece{prime, alpha, rep.M / ipow(prime, alpha), 0, std::nullopt};
      std::vector<Permutation> gens;
      for (const auto& l : actions.left) gens.push_back(l.pow(static_cast<std::int64_t>(piece.q)));
      PermGroup sub = PermGroup::generate(n, gens, perm_bound);
      piece.order = sub.order();
      piece.prime_power = is_power_of(piece.order, prime);
      if (!piece.prime_power) rep.orders_ok = false;
      piece.normal = true;
      for (const auto& l : actions.left)
        for (const auto& h : sub.generators())
          if (!sub.contains(l * h * l.inverse())) piece.normal = false;
      rep.pieces.push_back(piece);
      sets.emplace_back(sub.elements().begin(), sub.elements().end());
    }
    for (std::size_t a = 0; a < sets.size(); ++a)
      for (std::size_t b = a + 1; b < sets.size(); ++b)
        if (product_set<Permutation>(sets[a], sets[b], mul) !=
            product_set<Permutation>(sets[b], sets[a], mul))
          rep.pairwise_commute = false;
    PermSet all{Permutation::identity(n)};
    for (const auto& set : sets) all = product_set<Permutation>(all, set, mul);
    rep.covers = all.size() == gl.order();
    for (const auto& e : all)
      if (!gl.contains(e)) rep.covers = false;
  }
  for (std::size_t a = 0; a < rep.pieces.size(); ++a)
    for (std::size_t b = a + 1; b < rep.pieces.size(); ++b)
      if (std::gcd(rep.pieces[a].order, rep.pieces[b].order) != 1) rep.coprime = false;
  return rep;
}

DecomposabilityReport decomposability_criteria(const SolutionMap& s) {
  DecomposabilityReport rep;
  auto actions = compute_actions(s);
  rep.M = actions.cyclic_degree;
  rep.n = s.size();
  for (auto [prime, alpha] : factorize(rep.n)) {
    if (rep.M % prime != 0) rep.primes_of_n_not_dividing_M.push_back(prime);
    for (Index x = 0; x < rep.n; ++x) {
      bool in_p_cycle = false;
      for (Index y = 0; y < rep.n && !in_p_cycle; ++y)
        in_p_cycle = actions.left[y].cycle_of(x).size() % prime == 0;
      if (!in_p_cycle) rep.outside_p_cycles.emplace_back(prime, x);
    }
  }
  rep.gcd_criterion = !rep.primes_of_n_not_dividing_M.empty();
  rep.cycle_criterion = !rep.outside_p_cycles.empty();
  rep.orbit_count = orbits_left(s).size();
  rep.consistent = !(rep.gcd_criterion || rep.cycle_criterion) || rep.orbit_count >= 2;
  return rep;
}

}  // namespace ybe
