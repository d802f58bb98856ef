#include "ybe/solution.hpp"

#include <algorithm>
#include <numeric>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
  return names;
}

}  // namespace

SolutionMap::SolutionMap(std::size_t n, std::vector<Pair> table,
                         std::vector<std::string> names)
    : n_(n), table_(std::move(table)), names_(std::move(names)) {
  if (n_ == 0) throw ValidationError("a solution needs at least one point");
  if (table_.size() != n_ * n_) {
    throw ValidationError("table must have n^2 entries");
  }
  std::vector<bool> hit(n_ * n_, false);
  for (const Pair& p : table_) {
    if (p.first >= n_ || p.second >= n_) {
      throw ValidationError("table entry out of range");
    }
    auto k = p.first * n_ + p.second;
    if (hit[k]) {
      throw ValidationError("table is not a bijection: (" +
                            std::to_string(p.first + 1) + "," +
                            std::to_string(p.second + 1) + ") is hit twice");
    }
    hit[k] = true;
  }
  if (!names_.empty()) {
    if (names_.size() != n_) throw ValidationError("need exactly n names");
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("names must be distinct");
    }
    display_ = names_;
  } else {
    display_ = default_names(n_);
  }
}

SolutionMap SolutionMap::identity(std::size_t n) {
  std::vector<Pair> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x * n + y] = {x, y};
  return SolutionMap(n, std::move(t));
}

SolutionMap SolutionMap::trivial(std::size_t n) {
  std::vector<Pair> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x * n + y] = {y, x};
  return SolutionMap(n, std::move(t));
}

SolutionMap SolutionMap::with_names(std::vector<std::string> names) const {
  return SolutionMap(n_, table_, std::move(names));
}

std::optional<Index> SolutionMap::find(std::string_view label) const {
  for (Index i = 0; i < n_; ++i) {
    if (display_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t SolutionMap::moved_pairs() const {
  std::size_t count = 0;
  for (Index x = 0; x < n_; ++x)
    for (Index y = 0; y < n_; ++y)
      if ((*this)(x, y) != Pair{x, y}) ++count;
  return count;
}

std::vector<Index> apply_r1(const SolutionMap& s, std::vector<Index> t) {
  Pair p = s(t[0], t[1]);
  t[0] = p.first;
  t[1] = p.second;
  return t;
}

std::vector<Index> apply_r2(const SolutionMap& s, std::vector<Index> t) {
  Pair p = s(t[1], t[2]);
  t[1] = p.first;
  t[2] = p.second;
  return t;
}

PropertyReport classify(const SolutionMap& s, std::uint64_t order_bound) {
  const std::size_t n = s.size();
  PropertyReport rep;

  rep.involutive = true;
  for (Index x = 0; x < n && rep.involutive; ++x)
    for (Index y = 0; y < n; ++y)
      if (s(s(x, y)) != Pair{x, y}) {
        rep.involutive = false;
        rep.involutive_witness = Pair{x, y};
        break;
      }

  // L_x(y) is the first component of r(x, y); R_y(x) the second.
  rep.left_nondegenerate = true;
  for (Index x = 0; x < n && rep.left_nondegenerate; ++x) {
    std::vector<bool> hit(n, false);
    for (Index y = 0; y < n; ++y) {
      Index img = s(x, y).first;
      if (hit[img]) {
        rep.left_nondegenerate = false;
        rep.left_degenerate_at = x;
        break;
      }
      hit[img] = true;
    }
  }
  rep.right_nondegenerate = true;
  for (Index y = 0; y < n && rep.right_nondegenerate; ++y) {
    std::vector<bool> hit(n, false);
    for (Index x = 0; x < n; ++x) {
      Index img = s(x, y).second;
      if (hit[img]) {
        rep.right_nondegenerate = false;
        rep.right_degenerate_at = y;
        break;
      }
      hit[img] = true;
    }
  }

  rep.square_free = true;
  for (Index x = 0; x < n; ++x) {
    if (s(x, x) != Pair{x, x}) {
      rep.square_free = false;
      rep.square_free_witness = x;
      break;
    }
  }

  rep.braided = true;
  for (Index x = 0; x < n && rep.braided; ++x)
    for (Index y = 0; y < n && rep.braided; ++y)
      for (Index z = 0; z < n; ++z) {
        std::vector<Index> t{x, y, z};
        auto lhs = apply_r1(s, apply_r2(s, apply_r1(s, t)));
        auto rhs = apply_r2(s, apply_r1(s, apply_r2(s, t)));
        if (lhs != rhs) {
          rep.braided = false;
          rep.braid_witness = t;
          break;
        }
      }

  rep.symmetric = rep.braided && rep.involutive;

  // r is a permutation of n^2 pairs; its order is the lcm of cycle lengths.
  std::uint64_t order = 1;
  bool within = true;
  std::vector<bool> seen(n * n, false);
  for (Index k = 0; k < n * n && within; ++k) {
    if (seen[k]) continue;
    std::uint64_t len = 0;
    Index cur = k;
    while (!seen[cur]) {
      seen[cur] = true;
      ++len;
      Pair p = s.table()[cur];
      cur = p.first * n + p.second;
    }
    order = std::lcm(order, len);
    if (order > order_bound) within = false;
  }
  if (within) rep.r_order = order;
  return rep;
}

bool braid_group_action_holds(const SolutionMap& s, std::size_t m) {
  const std::size_t n = s.size();
  if (m < 2) return true;
  auto apply_at = [&](std::vector<Index> t, std::size_t i) {
    Pair p = s(t[i], t[i + 1]);
    t[i] = p.first;
    t[i + 1] = p.second;
    return t;
  };
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= n;
  std::vector<Index> t(m);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t k = 0; k < m; ++k) {
      t[m - 1 - k] = static_cast<Index>(c % n);
      c /= n;
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
      // b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}
      if (i + 2 < m) {
        auto lhs = apply_at(apply_at(apply_at(t, i), i + 1), i);
        auto rhs = apply_at(apply_at(apply_at(t, i + 1), i), i + 1);
        if (lhs != rhs) return false;
      }
      // b_i b_j = b_j b_i for |i - j| > 1
      for (std::size_t j = i + 2; j + 1 < m; ++j) {
        if (apply_at(apply_at(t, j), i) != apply_at(apply_at(t, i), j)) return false;
      }
    }
  }
  return true;
}

SolutionMap build_permutation_solution(std::span<const Index> f,
                                       std::span<const Index> g) {
  const std::size_t n = f.size();
  if (g.size() != n) throw ValidationError("f and g must have the same size");
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] >= n || g[i] >= n) throw ValidationError("map image out of range");
  }
  // r is a bijection iff f and g are; otherwise the SolutionMap
  // constructor rejects the table.
  std::vector<Pair> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x * n + y] = {g[y], f[x]};
  return SolutionMap(n, std::move(t));
}

SolutionMap build_from_left_actions(std::span<const Permutation> left,
                                    bool require_square_free) {
  const std::size_t n = left.size();
  std::vector<Permutation> inv;
  inv.reserve(n);
  for (Index x = 0; x < n; ++x) {
    if (left[x].size() != n) throw ValidationError("L_x must act on all of X");
    if (require_square_free && left[x](x) != x) {
      throw ValidationError("L_" + std::to_string(x + 1) + " moves " +
                            std::to_string(x + 1) +
                            "; square-free requires L_x(x) = x");
    }
    inv.push_back(left[x].inverse());
  }
  std::vector<Pair> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x * n + y] = {left[x](y), inv[y](x)};
  return SolutionMap(n, std::move(t));
}

SolutionMap relabel(const SolutionMap& s, const Permutation& pi) {
  const std::size_t n = s.size();
  if (pi.size() != n) throw ValidationError("relabeling has the wrong size");
  std::vector<Pair> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Pair p = s(x, y);
      t[pi(x) * n + pi(y)] = {pi(p.first), pi(p.second)};
    }
  if (!s.has_names()) return SolutionMap(n, std::move(t));
  std::vector<std::string> names(n);
  for (Index x = 0; x < n; ++x) names[pi(x)] = s.name(x);
  return SolutionMap(n, std::move(t), std::move(names));
}

CanonicalForm canonical_form(const SolutionMap& s, std::size_t bound) {
  const std::size_t n = s.size();
  if (n > bound) {
    throw BoundExceeded("canonical_form: n = " + std::to_string(n) +
                        " exceeds bound " + std::to_string(bound));
  }
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> inv(n);

  std::vector<Pair> best;
  std::vector<Index> best_perm;
  std::vector<Pair> cur(n * n);
  do {
    for (Index x = 0; x < n; ++x) inv[perm[x]] = x;
    // Fill the relabeled table position by position and stop as soon as
    // the prefix is worse than the best seen so far.
    bool better = best.empty();
    bool abandoned = false;
    for (Index a = 0; a < n && !abandoned; ++a) {
      for (Index b = 0; b < n; ++b) {
        Pair p = s(inv[a], inv[b]);
        Pair q{perm[p.first], perm[p.second]};
        cur[a * n + b] = q;
        if (!better) {
          const Pair& ref = best[a * n + b];
          if (q < ref) {
            better = true;
          } else if (ref < q) {
            abandoned = true;
            break;
          }
        }
      }
    }
    if (!abandoned && better) {
      best = cur;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {SolutionMap(n, std::move(best)), Permutation(std::move(best_perm))};
}

bool isomorphic(const SolutionMap& a, const SolutionMap& b, std::size_t bound) {
  if (a.size() != b.size()) return false;
  return canonical_form(a, bound).form == canonical_form(b, bound).form;
}

}  // namespace ybe
