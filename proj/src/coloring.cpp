#include "markov/coloring.hpp"

#include <stdexcept>
#include <utility>

namespace markov {

ValuationDecomposition valuation5(const BigNat& n) {
  if (n == 0) throw std::domain_error("valuation of zero undefined");
  if (n < 0) throw std::domain_error("valuation5 requires n >= 1");
  static const BigNat five = 5;
  ValuationDecomposition d{0, BigNat()};
  d.v = mpz_remove(d.m.get_mpz_t(), n.get_mpz_t(), five.get_mpz_t());
  return d;
}

const char* to_string(ColorClass c) {
  return kColorClassNames[static_cast<std::size_t>(c)];
}

ColorClass ninefold_color(const BigNat& n) {
  if (n < 1)
    throw std::domain_error("coloring is defined on positive integers only");
  switch (mpz_fdiv_ui(n.get_mpz_t(), 5)) {
    case 0: return ColorClass::A0;
    case 2: return ColorClass::A2;
    case 3: return ColorClass::A3;
    case 4: return ColorClass::A4;
    default: break;  // n == 1 (mod 5)
  }
  if (n == 1) return ColorClass::C;
  ValuationDecomposition d = valuation5(n - 1);
  switch (mpz_fdiv_ui(d.m.get_mpz_t(), 5)) {
    case 1: return ColorClass::B1;
    case 2: return ColorClass::B2;
    case 3: return ColorClass::B3;
    default: return ColorClass::B4;
  }
}

const std::string& NinefoldColoring::name() const {
  static const std::string kName = "paper";
  return kName;
}

const std::vector<std::string>& NinefoldColoring::labels() const {
  static const std::vector<std::string> kLabels(kColorClassNames.begin(),
                                                kColorClassNames.end());
  return kLabels;
}

std::size_t NinefoldColoring::color_index(const BigNat& n) const {
  return static_cast<std::size_t>(ninefold_color(n));
}

ModularColoring::ModularColoring(unsigned long modulus,
                                 std::vector<std::string> table)
    : modulus_(modulus), table_(std::move(table)) {
  if (modulus_ < 2) throw std::invalid_argument("modulus must be >= 2");
  if (table_.empty()) throw std::invalid_argument("class table is empty");
  if (table_.size() != modulus_)
    throw std::invalid_argument("class table length must equal the modulus");
  class_of_.resize(modulus_);
  for (unsigned long r = 0; r < modulus_; ++r) {
    std::size_t idx = 0;
    while (idx < labels_.size() && labels_[idx] != table_[r]) ++idx;
    if (idx == labels_.size()) labels_.push_back(table_[r]);
    class_of_[r] = idx;
  }
  name_ = "mod:" + std::to_string(modulus_) + ":";
  for (unsigned long r = 0; r < modulus_; ++r) {
    if (r) name_ += ',';
    name_ += table_[r];
  }
}

std::size_t ModularColoring::color_index(const BigNat& n) const {
  if (n < 1)
    throw std::domain_error("coloring is defined on positive integers only");
  return class_of_[mpz_fdiv_ui(n.get_mpz_t(), modulus_)];
}

std::size_t ModularColoring::residue_class(unsigned long r) const {
  if (r >= modulus_) throw std::out_of_range("residue exceeds modulus");
  return class_of_[r];
}

ModularColoring modular_scheme(unsigned long modulus,
                               std::vector<std::string> table) {
  return ModularColoring(modulus, std::move(table));
}

DepthParityColoring::DepthParityColoring(const Bound& bound, unsigned threads)
    : bound_(bound.value) {
  for (const auto& t : enumerate_triples(bound, threads)) {
    auto [it, fresh] = depth_by_max_.try_emplace(t.z, *t.depth);
    if (!fresh)
      throw std::runtime_error("uniqueness violated; d(m) ill-defined");
  }
}

const std::string& DepthParityColoring::name() const {
  static const std::string kName = "depth";
  return kName;
}

const std::vector<std::string>& DepthParityColoring::labels() const {
  static const std::vector<std::string> kLabels{"A", "B"};
  return kLabels;
}

std::size_t DepthParityColoring::color_index(const BigNat& n) const {
  if (n < 1)
    throw std::domain_error("coloring is defined on positive integers only");
  if (n > bound_) throw std::domain_error("out of verified range");
  auto it = depth_by_max_.find(n);
  return (it != depth_by_max_.end() && it->second % 2 == 0) ? 0 : 1;
}

std::optional<unsigned> DepthParityColoring::depth_of(const BigNat& m) const {
  auto it = depth_by_max_.find(m);
  if (it == depth_by_max_.end()) return std::nullopt;
  return it->second;
}

DepthColor depth_color(const BigNat& n, const Bound& bound) {
  DepthParityColoring scheme(bound);
  return scheme.color_index(n) == 0 ? DepthColor::A : DepthColor::B;
}

}  // namespace markov
