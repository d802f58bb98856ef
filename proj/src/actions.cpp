#include "ybe/actions.hpp"

#include <numeric>

#include "ybe/errors.hpp"
#include "ybe/io.hpp"

namespace ybe {

ActionTable compute_actions(const SolutionMap& s) {
  const std::size_t n = s.size();
  ActionTable t;
  t.left.reserve(n);
  t.right.reserve(n);
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> l(n), r(n);
    for (Index y = 0; y < n; ++y) {
      l[y] = s(x, y).first;
      r[y] = s(y, x).second;
    }
    try {
      t.left.emplace_back(std::move(l));
    } catch (const ValidationError&) {
      throw ValidationError("degenerate: L_" + s.name(x) + " is not a bijection");
    }
    try {
      t.right.emplace_back(std::move(r));
    } catch (const ValidationError&) {
      throw ValidationError("degenerate: R_" + s.name(x) + " is not a bijection");
    }
    t.orders.push_back(t.left.back().order());
    t.cyclic_degree = std::lcm(t.cyclic_degree, t.orders.back());
  }
  return t;
}

namespace {

std::size_t wrap(std::size_t i, int delta, std::size_t len) {
  return (i + len + static_cast<std::size_t>(static_cast<long>(len) + delta)) % len;
}

std::string grid_message(const SolutionMap& s, const std::string& what, Index y, Index x,
                         std::size_t i, std::size_t j) {
  return what + " fails for base (" + s.name(y) + ", " + s.name(x) + ") at i = " +
         std::to_string(i + 1) + ", j = " + std::to_string(j + 1);
}

}  // namespace

CyclePair cycle_pair(const SolutionMap& s, Index y, Index x) {
  if (x == y) throw ValidationError("cycle_pair needs x != y");
  auto actions = compute_actions(s);
  CyclePair cp{{y, x}, actions.left[y].cycle_of(x), actions.left[x].cycle_of(y)};
  const auto& xs = cp.x_cycle;
  const auto& ys = cp.y_cycle;
  for (Index a : xs)
    for (Index b : ys)
      if (a == b) {
        throw Falsification("cycles through " + s.name(x) + " and " + s.name(y) + " meet",
                            {"shared point " + s.name(a)});
      }
  const std::size_t m = xs.size(), k = ys.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Pair xy = s(xs[i], ys[j]);
      Pair yx = s(ys[j], xs[i]);
      if (xy != Pair{ys[wrap(j, 1, k)], xs[wrap(i, -1, m)]}) {
        auto msg = grid_message(s, "r(x_i y_j) = y_{j+1} x_{i-1}", y, x, i, j);
        throw Falsification(msg, {msg});
      }
      if (yx != Pair{xs[wrap(i, 1, m)], ys[wrap(j, -1, k)]}) {
        auto msg = grid_message(s, "r(y_j x_i) = x_{i+1} y_{j-1}", y, x, i, j);
        throw Falsification(msg, {msg});
      }
    }
  return cp;
}

CyclicReport check_cyclic_conditions(const SolutionMap& s) {
  const std::size_t n = s.size();
  CyclicReport rep;
  auto actions = compute_actions(s);
  for (Index y = 0; y < n; ++y)
    for (Index x = 0; x < n; ++x) {
      if (x == y) continue;
      auto xs = actions.left[y].cycle_of(x);
      const std::size_t m = xs.size();
      if (rep.weak) {
        // y_1 = y and y_{j-1} = R_x(y_j): walk R_x^{-1} forward.
        auto ys = actions.right[x].inverse().cycle_of(y);
        const std::size_t k = ys.size();
        for (std::size_t i = 0; i < m && rep.weak; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (s(ys[j], xs[i]) != Pair{xs[wrap(i, 1, m)], ys[wrap(j, -1, k)]}) {
              rep.weak = false;
              rep.weak_witness = grid_message(s, "r(y_j x_i) = x_{i+1} y_{j-1}", y, x, i, j);
              break;
            }
      }
      if (rep.strong) {
        auto ys = actions.left[x].cycle_of(y);
        const std::size_t k = ys.size();
        for (std::size_t i = 0; i < m && rep.strong; ++i)
          for (std::size_t j = 0; j < k; ++j) {
            bool ok = s(xs[i], ys[j]) == Pair{ys[wrap(j, 1, k)], xs[wrap(i, -1, m)]} &&
                      s(ys[j], xs[i]) == Pair{xs[wrap(i, 1, m)], ys[wrap(j, -1, k)]};
            if (!ok) {
              rep.strong = false;
              rep.strong_witness = grid_message(s, "grid equalities", y, x, i, j);
              break;
            }
          }
      }
    }
  return rep;
}

PowerIdentityReport verify_power_identities(const SolutionMap& s, const Presentation& p,
                                            unsigned max_exp) {
  const std::size_t n = s.size();
  auto actions = compute_actions(s);
  const auto M = static_cast<unsigned>(actions.cyclic_degree);
  if (max_exp == 0) max_exp = M + 1;
  PowerIdentityReport rep;

  auto pw = [](Index g, unsigned e) { return Word(e, g); };
  auto cat = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto check = [&](const Word& lhs, const Word& rhs, const std::string& label) {
    ++rep.checked;
    if (normal_form(p, lhs) == normal_form(p, rhs)) return;
    rep.ok = false;
    if (rep.failures.size() < 8) {
      rep.failures.push_back(label + ": " + format_word(s, lhs) + " != " + format_word(s, rhs));
    }
  };

  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      const Permutation& Lx = actions.left[x];
      const Permutation& Ly = actions.left[y];
      Permutation Lx_inv = Lx.inverse();
      Permutation Ly_inv = Ly.inverse();

      auto m = static_cast<unsigned>(Ly.cycle_of(x).size());
      check(cat(pw(y, m), {x}), cat({x}, pw(Lx_inv(y), m)), "y^m x = x y_k^m");

      for (unsigned a = 1; a <= max_exp; ++a)
        for (unsigned b = 1; b <= max_exp; ++b) {
          Index x2 = Ly.pow(a)(x);
          Index y2 = Lx.pow(-static_cast<std::int64_t>(b))(y);
          check(cat(pw(y, a), pw(x, b)), cat(pw(x2, b), pw(y2, a)),
                "y^p x^q = (L_y^p x)^q (L_x^-q y)^p");
        }

      auto Mx = static_cast<unsigned>(actions.orders[x]);
      check(cat(pw(x, Mx), {y}), cat({y}, pw(Ly_inv(x), Mx)), "x^Mx y = y (L_y^-1 x)^Mx");
      check(cat(pw(x, M), pw(y, M)), cat(pw(y, M), pw(x, M)), "x^M y^M = y^M x^M");
    }
  return rep;
}

}  // namespace ybe
