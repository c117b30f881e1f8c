#pragma once

#include "markov/coloring.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace markov {

struct MonochromaticHit {
  MarkovTriple triple;
  std::string class_label;
  bool trivial;  // singular triple
};

struct AuditReport {
  std::string scheme;
  std::string bound;  // decimal string
  std::size_t triples;
  /// Element counts over [1, min(bound, 10^6)], in scheme label order.
  std::vector<std::pair<std::string, std::uint64_t>> class_counts;
  std::vector<MonochromaticHit> monochromatic;
  /// Wall time; diagnostic only, excluded from serialized output so that
  /// identical invocations stay byte-identical.
  double elapsed_seconds;

  bool nontrivial_empty() const;
};

/// Colors every coordinate of every triple with maximum <= bound and records
/// the monochromatic triples. Depth-scheme range errors propagate.
AuditReport audit_monochromatic(const ColoringScheme& scheme,
                                const Bound& bound, unsigned threads = 1);

struct UniquenessCollision {
  MarkovTriple first;
  MarkovTriple second;
};

struct UniquenessReport {
  std::string bound;  // decimal string
  std::size_t triples;
  std::size_t distinct_maxima;
  std::vector<UniquenessCollision> collisions;
  double elapsed_seconds;
};

/// Every pair of distinct normalized triples with max <= bound sharing a
/// maximum. An empty collision list verifies uniqueness of maxima in range.
UniquenessReport check_uniqueness(const Bound& bound, unsigned threads = 1);

/// True iff every coordinate of every triple with max <= bound occurs as the
/// maximum of some enumerated triple. Sound because a coordinate's own triple
/// has maximum equal to that coordinate, hence within bound.
bool check_max_coverage(const Bound& bound, unsigned threads = 1);

}  // namespace markov
