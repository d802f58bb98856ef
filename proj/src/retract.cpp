#include "ybe/retract.hpp"

#include <algorithm>
#include <map>

#include "ybe/actions.hpp"
#include "ybe/errors.hpp"
#include "ybe/group.hpp"

namespace ybe {

namespace {

constexpr Index kAbsent = static_cast<Index>(-1);

std::vector<Index> position_map(std::size_t n, const std::vector<Index>& subset) {
  std::vector<Index> pos(n, kAbsent);
  for (Index k = 0; k < subset.size(); ++k) {
    if (subset[k] >= n) throw ValidationError("subset point out of range");
    if (pos[subset[k]] != kAbsent) throw ValidationError("subset lists a point twice");
    pos[subset[k]] = k;
  }
  return pos;
}

std::string restricted_text(const SolutionMap& s, const std::vector<Index>& subset,
                            const Permutation& p) {
  std::string out;
  for (Index z : subset) {
    if (!out.empty()) out += ' ';
    out += s.name(z) + "->" + s.name(p(z));
  }
  return out;
}

}  // namespace

RetractStep retract(const SolutionMap& s) {
  auto rep = classify(s);
  if (!rep.is_square_free_solution()) {
    throw ContractViolation("retraction needs a square-free involutive solution");
  }
  const std::size_t n = s.size();
  auto actions = compute_actions(s);

  RetractStep step{std::vector<Index>(n, kAbsent), {}, SolutionMap::identity(1)};
  std::map<Permutation, Index> seen;
  for (Index x = 0; x < n; ++x) {
    auto [it, fresh] = seen.emplace(actions.left[x], static_cast<Index>(step.classes.size()));
    if (fresh) step.classes.emplace_back();
    step.class_of[x] = it->second;
    step.classes[it->second].push_back(x);
  }

  const std::size_t m = step.classes.size();
  std::vector<Pair> table(m * m);
  std::vector<std::string> names(m);
  for (Index a = 0; a < m; ++a) {
    names[a] = "[" + s.name(step.classes[a].front()) + "]";
    for (Index b = 0; b < m; ++b) {
      Pair img = s(step.classes[a].front(), step.classes[b].front());
      Pair cls{step.class_of[img.first], step.class_of[img.second]};
      for (Index x : step.classes[a])
        for (Index y : step.classes[b]) {
          Pair other = s(x, y);
          if (Pair{step.class_of[other.first], step.class_of[other.second]} != cls) {
            throw Falsification("induced retraction map is ill-defined",
                                {"r(" + s.name(x) + ", " + s.name(y) + ") lands in a different class pair"});
          }
        }
      table[a * m + b] = cls;
    }
  }
  step.induced = SolutionMap(m, std::move(table), std::move(names));
  return step;
}

LevelReport multipermutation_level(const SolutionMap& s, std::size_t max_steps) {
  LevelReport rep;
  SolutionMap cur = s;
  rep.sizes.push_back(cur.size());
  for (std::size_t k = 0;; ++k) {
    if (cur.size() == 1) {
      rep.level = k;
      return rep;
    }
    if (k == max_steps) return rep;
    auto step = retract(cur);
    if (step.irretractable()) {
      rep.irretractable_at = k;
      return rep;
    }
    cur = step.induced;
    rep.sizes.push_back(cur.size());
  }
}

std::vector<Index> retract_orbit(const SolutionMap& s, Index x, std::size_t k) {
  const std::size_t n = s.size();
  if (x >= n) throw ValidationError("point out of range");
  std::vector<Index> image(n);
  for (Index z = 0; z < n; ++z) image[z] = z;
  SolutionMap cur = s;
  for (std::size_t step = 0; step < k && cur.size() > 1; ++step) {
    auto st = retract(cur);
    for (auto& v : image) v = st.class_of[v];
    cur = st.induced;
  }
  std::vector<Index> orbit;
  for (Index z = 0; z < n; ++z)
    if (image[z] == image[x]) orbit.push_back(z);

  if (!is_r_invariant(s, orbit)) {
    throw Falsification("retract orbit is not r-invariant", {"orbit of " + s.name(x)});
  }
  auto level = multipermutation_level(restrict_to(s, orbit));
  if (!level.level || *level.level > k) {
    throw Falsification("retract orbit restriction exceeds level " + std::to_string(k),
                        {"orbit of " + s.name(x)});
  }
  return orbit;
}

SolutionMap restrict_to(const SolutionMap& s, const std::vector<Index>& subset) {
  auto pos = position_map(s.size(), subset);
  const std::size_t m = subset.size();
  if (m == 0) throw ValidationError("cannot restrict to the empty set");
  std::vector<Pair> table(m * m);
  std::vector<std::string> names(m);
  for (Index a = 0; a < m; ++a) {
    names[a] = s.name(subset[a]);
    for (Index b = 0; b < m; ++b) {
      Pair img = s(subset[a], subset[b]);
      if (pos[img.first] == kAbsent || pos[img.second] == kAbsent) {
        throw ValidationError("subset is not r-invariant: r(" + s.name(subset[a]) + ", " +
                              s.name(subset[b]) + ") leaves it");
      }
      table[a * m + b] = {pos[img.first], pos[img.second]};
    }
  }
  return SolutionMap(m, std::move(table), std::move(names));
}

UnionResult assemble_union(const UnionSpec& u) {
  const std::size_t nx = u.x.size(), ny = u.y.size(), n = nx + ny;
  const CrossMaps& c = u.cross;
  if (c.nx != nx || c.ny != ny || c.xy.size() != nx * ny || c.yx.size() != nx * ny) {
    throw ValidationError("cross maps do not match the sizes of X and Y");
  }
  std::vector<Pair> table(n * n);
  auto yi = [&](Index y) { return static_cast<Index>(nx + y); };
  for (Index a = 0; a < nx; ++a)
    for (Index b = 0; b < nx; ++b) table[a * n + b] = u.x(a, b);
  for (Index a = 0; a < ny; ++a)
    for (Index b = 0; b < ny; ++b) {
      Pair p = u.y(a, b);
      table[yi(a) * n + yi(b)] = {yi(p.first), yi(p.second)};
    }
  for (Index x = 0; x < nx; ++x)
    for (Index y = 0; y < ny; ++y) {
      Pair p = c.xy[x * ny + y];  // (y', x')
      Pair q = c.yx[y * nx + x];  // (x', y')
      if (p.first >= ny || p.second >= nx || q.first >= nx || q.second >= ny) {
        throw ValidationError("cross map entry out of range");
      }
      table[x * n + yi(y)] = {yi(p.first), p.second};
      table[yi(y) * n + x] = {q.first, yi(q.second)};
    }

  std::vector<std::string> names = u.x.names();
  names.insert(names.end(), u.y.names().begin(), u.y.names().end());
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  bool clash = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  SolutionMap z = clash ? SolutionMap(n, std::move(table)) : SolutionMap(n, std::move(table), names);
  auto report = classify(z);
  return {std::move(z), report};
}

UnionSpec split_union(const SolutionMap& s, const std::vector<Index>& subset) {
  const std::size_t n = s.size();
  auto px = position_map(n, subset);
  std::vector<Index> rest;
  for (Index z = 0; z < n; ++z)
    if (px[z] == kAbsent) rest.push_back(z);
  if (subset.empty() || rest.empty()) throw ValidationError("both parts must be nonempty");
  auto py = position_map(n, rest);

  UnionSpec u{restrict_to(s, subset), restrict_to(s, rest), {}};
  const std::size_t nx = subset.size(), ny = rest.size();
  u.cross.nx = nx;
  u.cross.ny = ny;
  u.cross.xy.resize(nx * ny);
  u.cross.yx.resize(nx * ny);
  for (Index a = 0; a < nx; ++a)
    for (Index b = 0; b < ny; ++b) {
      Pair p = s(subset[a], rest[b]);
      Pair q = s(rest[b], subset[a]);
      if (py[p.first] == kAbsent || px[p.second] == kAbsent || px[q.first] == kAbsent ||
          py[q.second] == kAbsent) {
        throw ValidationError("r does not exchange X x Y with Y x X");
      }
      u.cross.xy[a * ny + b] = {py[p.first], px[p.second]};
      u.cross.yx[b * nx + a] = {px[q.first], py[q.second]};
    }
  return u;
}

TwistedUnionReport is_generalized_twisted_union(const SolutionMap& s,
                                                const std::vector<Index>& subset) {
  // Validates the partition.
  split_union(s, subset);
  const std::size_t n = s.size();
  auto px = position_map(n, subset);
  std::vector<Index> xs = subset, ys;
  for (Index z = 0; z < n; ++z)
    if (px[z] == kAbsent) ys.push_back(z);

  auto actions = compute_actions(s);
  const auto& L = actions.left;
  const auto& R = actions.right;
  // Permutations restricted to a block, compared pointwise.
  auto same_on = [](const std::vector<Index>& block, const Permutation& a, const Permutation& b) {
    return std::all_of(block.begin(), block.end(), [&](Index z) { return a(z) == b(z); });
  };

  TwistedUnionReport rep;
  auto note = [&](const std::string& msg) {
    if (!rep.witness) rep.witness = msg;
  };

  rep.generalized = true;
  for (Index x : xs)
    for (Index y : ys)
      if (!same_on(ys, L[R[y](x)], L[R[ys.front()](x)])) {
        rep.generalized = false;
        note("L_{" + s.name(x) + "^y|Y} depends on y: " + s.name(y) + " vs " + s.name(ys.front()));
      }
  for (Index y : ys)
    for (Index x : xs)
      if (!same_on(xs, R[L[x](y)], R[L[xs.front()](y)])) {
        rep.generalized = false;
        note("R_{^x " + s.name(y) + "|X} depends on x: " + s.name(x) + " vs " + s.name(xs.front()));
      }

  rep.equalities = true;
  for (Index x : xs)
    for (Index y : ys) {
      if (!same_on(ys, L[R[y](x)], L[x]) || !same_on(ys, L[L[y](x)], L[x])) {
        rep.equalities = false;
        note("L_{x^y|Y} = L_{x|Y} = L_{^y x|Y} fails at x = " + s.name(x) + ", y = " + s.name(y) +
             " (L_x|Y: " + restricted_text(s, ys, L[x]) + ")");
      }
      if (!same_on(xs, L[L[x](y)], L[y]) || !same_on(xs, L[R[x](y)], L[y])) {
        rep.equalities = false;
        note("L_{^x y|X} = L_{y|X} = L_{y^x|X} fails at x = " + s.name(x) + ", y = " + s.name(y) +
             " (L_y|X: " + restricted_text(s, xs, L[y]) + ")");
      }
    }

  // Twisted: L_x|Y = g and R_x|Y = g^{-1} for all x, L_y|X = f and
  // R_y|X = f^{-1} for all y.
  rep.twisted = true;
  for (Index x : xs)
    for (Index y : ys) {
      Index x0 = xs.front(), y0 = ys.front();
      if (L[x](y) != L[x0](y) || R[x](L[x0](y)) != y || L[y](x) != L[y0](x) ||
          R[y](L[y0](x)) != x) {
        if (rep.twisted) rep.twisted_witness = ("cross action is not given by a single pair (f, g) at x = " +
                                                s.name(x) + ", y = " + s.name(y));
        rep.twisted = false;
      }
    }
  return rep;
}

}  // namespace ybe
