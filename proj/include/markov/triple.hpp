#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace markov {

using BigNat = mpz_class;

/// A normalized positive-integer solution of x^2 + y^2 + z^2 = 3xyz:
/// coordinates sorted x <= y <= z, gcd(x, y, z) = 1. `depth` is the number
/// of tree edges from the root (1,1,1); it is attached by the enumerator
/// and absent on freshly normalized triples.
struct MarkovTriple {
  BigNat x;
  BigNat y;
  BigNat z;
  std::optional<unsigned> depth;

  friend bool operator==(const MarkovTriple& a, const MarkovTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const MarkovTriple& a, const MarkovTriple& b) {
    return !(a == b);
  }
  // Lexicographic on (x, y, z); depth does not participate.
  friend bool operator<(const MarkovTriple& a, const MarkovTriple& b);
};

/// Inclusive cap on the largest coordinate of enumerated triples. Always >= 1.
struct Bound {
  BigNat value;
  explicit Bound(BigNat v);
  explicit Bound(unsigned long v) : Bound(BigNat(v)) {}
};

/// True iff x^2 + y^2 + z^2 = 3xyz, in any coordinate order.
/// Throws std::domain_error if any coordinate is zero or negative.
bool is_markov_triple(const BigNat& x, const BigNat& y, const BigNat& z);

/// Sorted representative of a solution multiset, depth unset.
/// Throws std::domain_error("not a Markov triple") on non-solutions.
MarkovTriple normalize(const BigNat& x, const BigNat& y, const BigNat& z);

/// The upward Vieta moves (y, z, 3yz-x) and (x, z, 3xz-y), deduplicated.
/// The singular triples (1,1,1) and (1,1,2) have one child each; every other
/// triple has two. Children carry depth = t.depth + 1 when t.depth is set.
std::vector<MarkovTriple> vieta_children(const MarkovTriple& t);

/// The downward Vieta move normalize(x, y, 3xy-z).
/// Throws std::domain_error on the root (1,1,1).
MarkovTriple vieta_parent(const MarkovTriple& t);

/// Every normalized triple with z <= bound, exactly once: breadth-first by
/// depth, lexicographic (x, y, z) within a depth level. Pruning a child whose
/// maximum exceeds the bound is sound because the maximum strictly increases
/// along every tree edge. `threads` > 1 splits each frontier level across
/// workers; the output is identical for any thread count.
std::vector<MarkovTriple> enumerate_triples(const Bound& bound,
                                            unsigned threads = 1);

/// Sorted, duplicate-free list of all coordinates of triples with z <= bound.
std::vector<BigNat> markov_numbers(const Bound& bound);

/// gcd of the three coordinates.
BigNat triple_gcd(const BigNat& x, const BigNat& y, const BigNat& z);

/// The two triples with repeated entries: (1,1,1) and (1,1,2).
bool is_singular(const MarkovTriple& t);

}  // namespace markov
