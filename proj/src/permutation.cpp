#include "ybe/permutation.hpp"

#include <numeric>

#include "ybe/errors.hpp"

namespace ybe {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Index y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw ValidationError("not a permutation: image table is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t n, std::initializer_list<std::initializer_list<Index>> cycles) {
  std::vector<std::vector<Index>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(n, cs);
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Index>>& cycles) {
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Index from = c[k];
      Index to = c[(k + 1) % c.size()];
      if (from < 1 || from > n || to < 1 || to > n) {
        throw ValidationError("cycle point out of range");
      }
      if (used[from - 1]) throw ValidationError("cycles are not disjoint");
      used[from - 1] = true;
      img[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (Index x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Index> img(b.size());
  for (Index x = 0; x < b.size(); ++x) img[x] = a.images_[b.images_[x]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result = identity(size());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (Index x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(size(), false);
  for (Index x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Index y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<Index> Permutation::cycle_of(Index x) const {
  std::vector<Index> c{x};
  for (Index y = images_[x]; y != x; y = images_[y]) c.push_back(y);
  return c;
}

std::vector<std::vector<Index>> Permutation::cycles() const {
  std::vector<std::vector<Index>> out;
  std::vector<bool> seen(size(), false);
  for (Index x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    auto c = cycle_of(x);
    for (Index y : c) seen[y] = true;
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string(std::span<const std::string> names) const {
  auto cs = cycles();
  if (cs.empty()) return "id";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) s += ' ';
      s += names.empty() ? std::to_string(c[k] + 1) : names[c[k]];
    }
    s += ')';
  }
  return s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Index x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace ybe
