#include "markov/audit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace markov {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t count_cap(const BigNat& bound) {
  static const BigNat kMillion = 1000000;
  if (bound >= kMillion) return 1000000;
  return bound.get_ui();
}

}  // namespace

bool AuditReport::nontrivial_empty() const {
  return std::none_of(monochromatic.begin(), monochromatic.end(),
                      [](const MonochromaticHit& h) { return !h.trivial; });
}

AuditReport audit_monochromatic(const ColoringScheme& scheme,
                                const Bound& bound, unsigned threads) {
  auto start = Clock::now();
  AuditReport report;
  report.scheme = scheme.name();
  report.bound = bound.value.get_str();

  std::vector<MarkovTriple> triples = enumerate_triples(bound, threads);
  report.triples = triples.size();
  for (auto& t : triples) {
    std::size_t cx = scheme.color_index(t.x);
    if (cx != scheme.color_index(t.y) || cx != scheme.color_index(t.z))
      continue;
    bool trivial = is_singular(t);
    report.monochromatic.push_back(
        MonochromaticHit{std::move(t), scheme.labels()[cx], trivial});
  }

  std::vector<std::uint64_t> counts(scheme.class_count(), 0);
  std::uint64_t cap = count_cap(bound.value);
  BigNat n;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    n = static_cast<unsigned long>(k);
    ++counts[scheme.color_index(n)];
  }
  for (std::size_t c = 0; c < counts.size(); ++c)
    report.class_counts.emplace_back(scheme.labels()[c], counts[c]);

  report.elapsed_seconds = seconds_since(start);
  return report;
}

UniquenessReport check_uniqueness(const Bound& bound, unsigned threads) {
  auto start = Clock::now();
  UniquenessReport report;
  report.bound = bound.value.get_str();

  std::vector<MarkovTriple> triples = enumerate_triples(bound, threads);
  report.triples = triples.size();
  std::map<BigNat, const MarkovTriple*> first_by_max;
  for (const auto& t : triples) {
    auto [it, fresh] = first_by_max.try_emplace(t.z, &t);
    if (!fresh) report.collisions.push_back({*it->second, t});
  }
  report.distinct_maxima = first_by_max.size();

  report.elapsed_seconds = seconds_since(start);
  return report;
}

bool check_max_coverage(const Bound& bound, unsigned threads) {
  std::vector<MarkovTriple> triples = enumerate_triples(bound, threads);
  std::set<BigNat> maxima;
  for (const auto& t : triples) maxima.insert(t.z);
  for (const auto& t : triples) {
    if (!maxima.count(t.x) || !maxima.count(t.y)) return false;
  }
  return true;
}

}  // namespace markov
