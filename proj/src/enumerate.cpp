#include "ybe/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "ybe/actions.hpp"
#include "ybe/errors.hpp"
#include "ybe/group.hpp"
#include "ybe/retract.hpp"
#include "ybe/rewrite.hpp"

namespace ybe {

namespace {

using Table = std::vector<Pair>;

struct TableLess {
  bool operator()(const SolutionMap& a, const SolutionMap& b) const {
    auto ma = a.moved_pairs(), mb = b.moved_pairs();
    if (ma != mb) return ma < mb;
    auto ta = a.table(), tb = b.table();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
  }
};

std::vector<SolutionMap> sorted_canonical(std::vector<SolutionMap> found) {
  std::set<SolutionMap, TableLess> unique;
  for (const auto& s : found) unique.insert(canonical_form(s).form);
  return {unique.begin(), unique.end()};
}

// Permutations of [0, n) fixing x.
std::vector<std::vector<Index>> point_stabilizer(std::size_t n, Index x) {
  std::vector<Index> others;
  for (Index y = 0; y < n; ++y)
    if (y != x) others.push_back(y);
  std::vector<std::vector<Index>> out;
  do {
    std::vector<Index> img(n);
    img[x] = x;
    for (std::size_t k = 0, y = 0; y < n; ++y)
      if (y != x) img[y] = others[k++];
    out.push_back(std::move(img));
  } while (std::next_permutation(others.begin(), others.end()));
  return out;
}

// r(x, y) = (L_x y, L_y^{-1} x); cheap involutivity test before classify.
bool involutive_table(std::size_t n, const std::vector<const std::vector<Index>*>& left,
                      const std::vector<std::vector<Index>>& inv, Table& t) {
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x * n + y] = {(*left[x])[y], inv[y][x]};
  for (Index k = 0; k < n * n; ++k) {
    Pair p = t[k];
    Pair q = t[p.first * n + p.second];
    if (q.first * n + q.second != k) return false;
  }
  return true;
}

void search_shard(std::size_t n, const std::vector<std::vector<std::vector<Index>>>& stab,
                  std::size_t first, std::vector<SolutionMap>& out) {
  std::vector<const std::vector<Index>*> left(n);
  std::vector<std::vector<Index>> inv(n, std::vector<Index>(n));
  std::vector<std::size_t> choice(n, 0);
  choice[0] = first;
  Table t(n * n);
  std::set<Table> seen;
  while (true) {
    for (Index x = 0; x < n; ++x) {
      left[x] = &stab[x][choice[x]];
      for (Index y = 0; y < n; ++y) inv[x][(*left[x])[y]] = y;
    }
    if (involutive_table(n, left, inv, t)) {
      SolutionMap s(n, t);
      if (classify(s).is_square_free_solution()) {
        auto c = canonical_form(s).form;
        Table ct(c.table().begin(), c.table().end());
        if (seen.insert(ct).second) out.push_back(std::move(c));
      }
    }
    // Odometer over x = n-1 .. 1; x = 0 is the shard key.
    std::size_t x = n;
    while (x-- > 1) {
      if (++choice[x] < stab[x].size()) break;
      choice[x] = 0;
    }
    if (x == 0) return;
  }
}

void collect_involutions(std::size_t n, std::vector<Pair>& off, std::size_t k, Table& t,
                         std::vector<bool>& used, std::vector<SolutionMap>& out) {
  while (k < off.size() && used[k]) ++k;
  if (k == off.size()) {
    SolutionMap s(n, t);
    if (classify(s).is_square_free_solution()) out.push_back(s);
    return;
  }
  used[k] = true;
  Pair u = off[k];
  // u fixed.
  t[u.first * n + u.second] = u;
  collect_involutions(n, off, k + 1, t, used, out);
  for (std::size_t m = k + 1; m < off.size(); ++m) {
    if (used[m]) continue;
    used[m] = true;
    Pair v = off[m];
    t[u.first * n + u.second] = v;
    t[v.first * n + v.second] = u;
    collect_involutions(n, off, k + 1, t, used, out);
    t[v.first * n + v.second] = v;
    used[m] = false;
  }
  t[u.first * n + u.second] = u;
  used[k] = false;
}

}  // namespace

std::vector<SolutionMap> enumerate_square_free(std::size_t n, unsigned jobs) {
  if (n < 1 || n > 5) throw ValidationError("enumeration supports 1 <= n <= 5");
  std::vector<std::vector<std::vector<Index>>> stab(n);
  for (Index x = 0; x < n; ++x) stab[x] = point_stabilizer(n, x);

  const std::size_t shards = stab[0].size();
  std::vector<std::vector<SolutionMap>> results(shards);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(shards)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < shards; k += jobs) search_shard(n, stab, k, results[k]);
    });
  }
  for (auto& th : pool) th.join();

  std::vector<SolutionMap> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return sorted_canonical(std::move(all));
}

std::vector<SolutionMap> enumerate_square_free_raw(std::size_t n) {
  if (n < 1 || n > 4) throw ValidationError("raw enumeration supports 1 <= n <= 4");
  Table t(n * n);
  std::vector<Pair> off;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      t[x * n + y] = {x, y};
      if (x != y) off.push_back({x, y});
    }
  std::vector<bool> used(off.size(), false);
  std::vector<SolutionMap> found;
  collect_involutions(n, off, 0, t, used, found);
  return sorted_canonical(std::move(found));
}

CatalogEntry survey_entry(const SolutionMap& s) {
  CatalogEntry e{s, 1, 0, {}, {}, {}, {}, 1, 0};
  auto actions = compute_actions(s);
  e.M = actions.cyclic_degree;
  e.orbit_count = orbits_left(s).size();
  auto level = multipermutation_level(s);
  e.level = level.level;
  e.irretractable_at = level.irretractable_at;
  auto search = find_skew_ordering(s);
  e.ordering = search.ordering;
  e.ordering_strategy = search.strategy;
  e.group_order = permutation_group_L(s).order();
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y)
      if (x != y && s(x, y) != Pair{y, x}) ++e.relations;
  e.relations /= 2;
  return e;
}

std::vector<CatalogEntry> survey(std::size_t n, unsigned jobs) {
  std::vector<CatalogEntry> out;
  for (const auto& s : enumerate_square_free(n, jobs)) out.push_back(survey_entry(s));
  return out;
}

ConjectureAudit audit_retractability(std::size_t n, unsigned jobs) {
  ConjectureAudit audit;
  audit.n = n;
  for (const auto& s : enumerate_square_free(n, jobs)) {
    ++audit.total;
    auto level = multipermutation_level(s);
    bool ok = s.size() == 1 || !level.irretractable_at || *level.irretractable_at > 0;
    if (ok) {
      ++audit.retractable;
    } else {
      audit.counterexamples.push_back(s);
    }
  }
  return audit;
}

}  // namespace ybe
