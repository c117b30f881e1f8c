#include "markov/triple.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <stdexcept>
#include <utility>

namespace markov {

bool operator<(const MarkovTriple& a, const MarkovTriple& b) {
  if (int c = cmp(a.x, b.x)) return c < 0;
  if (int c = cmp(a.y, b.y)) return c < 0;
  return cmp(a.z, b.z) < 0;
}

Bound::Bound(BigNat v) : value(std::move(v)) {
  if (value < 1) throw std::domain_error("bound must be >= 1");
}

bool is_markov_triple(const BigNat& x, const BigNat& y, const BigNat& z) {
  if (x < 1 || y < 1 || z < 1)
    throw std::domain_error("coordinates must be positive integers");
  return x * x + y * y + z * z == 3 * x * y * z;
}

MarkovTriple normalize(const BigNat& x, const BigNat& y, const BigNat& z) {
  if (!is_markov_triple(x, y, z)) throw std::domain_error("not a Markov triple");
  MarkovTriple t{x, y, z, std::nullopt};
  if (t.x > t.y) swap(t.x, t.y);
  if (t.y > t.z) swap(t.y, t.z);
  if (t.x > t.y) swap(t.x, t.y);
  return t;
}

std::vector<MarkovTriple> vieta_children(const MarkovTriple& t) {
  std::optional<unsigned> d;
  if (t.depth) d = *t.depth + 1;
  // Both moves produce coordinates already in sorted order:
  // y <= z <= 3yz - x and x <= z <= 3xz - y, each new maximum > z.
  MarkovTriple a{t.y, t.z, 3 * t.y * t.z - t.x, d};
  MarkovTriple b{t.x, t.z, 3 * t.x * t.z - t.y, d};
  std::vector<MarkovTriple> kids;
  kids.reserve(2);
  kids.push_back(std::move(a));
  if (b != kids.front()) kids.push_back(std::move(b));
  assert(kids.front().z > t.z);
  return kids;
}

MarkovTriple vieta_parent(const MarkovTriple& t) {
  if (t.x == 1 && t.y == 1 && t.z == 1)
    throw std::domain_error("the root triple has no parent");
  MarkovTriple p = normalize(t.x, t.y, 3 * t.x * t.y - t.z);
  if (t.depth && *t.depth > 0) p.depth = *t.depth - 1;
  return p;
}

namespace {

void expand_range(const std::vector<MarkovTriple>& level, std::size_t lo,
                  std::size_t hi, const BigNat& cap,
                  std::vector<MarkovTriple>& out) {
  for (std::size_t k = lo; k < hi; ++k) {
    for (auto& child : vieta_children(level[k])) {
      if (child.z <= cap) out.push_back(std::move(child));
    }
  }
}

// Expands one breadth-first level. Workers expand disjoint slices of the
// frontier; the merged result is re-sorted, so the output does not depend
// on the worker count.
std::vector<MarkovTriple> expand_level(const std::vector<MarkovTriple>& level,
                                       const BigNat& cap, unsigned threads) {
  std::vector<MarkovTriple> next;
  std::size_t workers = std::min<std::size_t>(threads, level.size());
  if (workers <= 1) {
    expand_range(level, 0, level.size(), cap, next);
  } else {
    std::vector<std::future<std::vector<MarkovTriple>>> parts;
    std::size_t chunk = (level.size() + workers - 1) / workers;
    for (std::size_t lo = 0; lo < level.size(); lo += chunk) {
      std::size_t hi = std::min(level.size(), lo + chunk);
      parts.push_back(std::async(std::launch::async, [&level, lo, hi, &cap] {
        std::vector<MarkovTriple> out;
        expand_range(level, lo, hi, cap, out);
        return out;
      }));
    }
    for (auto& part : parts) {
      for (auto& t : part.get()) next.push_back(std::move(t));
    }
  }
  std::sort(next.begin(), next.end());
  assert(std::adjacent_find(next.begin(), next.end()) == next.end());
  return next;
}

}  // namespace

std::vector<MarkovTriple> enumerate_triples(const Bound& bound,
                                            unsigned threads) {
  std::vector<MarkovTriple> out;
  std::vector<MarkovTriple> level;
  level.push_back(MarkovTriple{1, 1, 1, 0});
  while (!level.empty()) {
    std::vector<MarkovTriple> next = expand_level(level, bound.value, threads);
    for (auto& t : level) out.push_back(std::move(t));
    level = std::move(next);
  }
  return out;
}

std::vector<BigNat> markov_numbers(const Bound& bound) {
  std::vector<BigNat> nums;
  for (const auto& t : enumerate_triples(bound)) {
    nums.push_back(t.x);
    nums.push_back(t.y);
    nums.push_back(t.z);
  }
  std::sort(nums.begin(), nums.end());
  nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
  return nums;
}

BigNat triple_gcd(const BigNat& x, const BigNat& y, const BigNat& z) {
  BigNat g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

bool is_singular(const MarkovTriple& t) {
  return t.x == 1 && t.y == 1 && (t.z == 1 || t.z == 2);
}

}  // namespace markov
