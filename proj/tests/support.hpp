#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ybe/enumerate.hpp"
#include "ybe/io.hpp"
#include "ybe/permutation.hpp"
#include "ybe/rewrite.hpp"
#include "ybe/solution.hpp"

namespace ybe::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(YBE_FIXTURES_DIR) + "/" + name;
}

inline SolutionDocument fixture_doc(const std::string& name) {
  return load_solution_file(fixture_path(name));
}

inline SolutionMap fixture(const std::string& name) { return fixture_doc(name).solution; }

/// Square-free catalog for n = 1..4, computed once.
inline const std::vector<SolutionMap>& catalog_up_to_4() {
  static const std::vector<SolutionMap> all = [] {
    std::vector<SolutionMap> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto c = enumerate_square_free(n);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }();
  return all;
}

using Rng = std::mt19937_64;

inline Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline Word random_word(std::size_t n, std::size_t len, Rng& rng) {
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  Word w(len);
  for (auto& g : w) g = pick(rng);
  return w;
}

/// A random bijection of X x X, not necessarily a solution.
inline SolutionMap random_bijection(std::size_t n, Rng& rng) {
  std::vector<Pair> t;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t.push_back({x, y});
  std::shuffle(t.begin(), t.end(), rng);
  return SolutionMap(n, std::move(t));
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline ExponentVector ev(std::initializer_list<unsigned> e) { return ExponentVector(e); }

/// Monomial x_{i_1} ... x_{i_k} from 1-based indices.
inline Word word(std::initializer_list<Index> one_based) {
  Word w;
  for (Index g : one_based) w.push_back(g - 1);
  return w;
}

inline std::vector<Permutation> left_actions(const SolutionMap& s) {
  std::vector<Permutation> out;
  for (Index x = 0; x < s.size(); ++x) {
    std::vector<Index> img(s.size());
    for (Index y = 0; y < s.size(); ++y) img[y] = s(x, y).first;
    out.emplace_back(std::move(img));
  }
  return out;
}

}  // namespace ybe::test
