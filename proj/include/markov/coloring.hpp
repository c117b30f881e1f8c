#pragma once

#include "markov/triple.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace markov {

/// n = 5^v * m with 5 not dividing m.
struct ValuationDecomposition {
  unsigned long v;
  BigNat m;
};

/// Decomposes n >= 1; throws std::domain_error("valuation of zero undefined")
/// on n = 0.
ValuationDecomposition valuation5(const BigNat& n);

/// The nine classes of the valuation-refined mod-5 coloring of {1, 2, 3, ...}:
///   A_i = { n : n == i (mod 5) } for i in {0, 2, 3, 4},
///   B_i = { n : n == 1 (mod 5), n > 1, cofactor of 5 in n-1 is == i (mod 5) },
///   C   = { 1 }.
enum class ColorClass { A0, A2, A3, A4, B1, B2, B3, B4, C };

inline constexpr std::array<const char*, 9> kColorClassNames{
    "A0", "A2", "A3", "A4", "B1", "B2", "B3", "B4", "C"};

const char* to_string(ColorClass c);

/// Class of n under the ninefold coloring. Throws on n < 1.
ColorClass ninefold_color(const BigNat& n);

/// Two-coloring from the tree: A = Markov numbers of even depth, B = rest.
enum class DepthColor { A, B };

/// A total labelled partition of the positive integers into finitely many
/// classes. Immutable after construction; safe to share across threads.
class ColoringScheme {
 public:
  virtual ~ColoringScheme() = default;
  virtual const std::string& name() const = 0;
  /// Class labels in a fixed order; `color_index` indexes into this.
  virtual const std::vector<std::string>& labels() const = 0;
  virtual std::size_t color_index(const BigNat& n) const = 0;

  const std::string& color_label(const BigNat& n) const {
    return labels()[color_index(n)];
  }
  std::size_t class_count() const { return labels().size(); }
};

/// The ninefold coloring as a scheme. Published scheme id: "paper".
class NinefoldColoring final : public ColoringScheme {
 public:
  const std::string& name() const override;
  const std::vector<std::string>& labels() const override;
  std::size_t color_index(const BigNat& n) const override;
};

/// n -> table[n mod modulus]. Entries may repeat; classes are the distinct
/// labels in first-appearance order.
class ModularColoring final : public ColoringScheme {
 public:
  ModularColoring(unsigned long modulus, std::vector<std::string> table);

  const std::string& name() const override { return name_; }
  const std::vector<std::string>& labels() const override { return labels_; }
  std::size_t color_index(const BigNat& n) const override;

  unsigned long modulus() const { return modulus_; }
  /// residue -> label, length = modulus.
  const std::vector<std::string>& table() const { return table_; }
  /// Class index of a residue in [0, modulus).
  std::size_t residue_class(unsigned long r) const;

 private:
  unsigned long modulus_;
  std::vector<std::string> table_;
  std::vector<std::size_t> class_of_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Spec'd constructor form; throws std::invalid_argument on an empty table
/// or a table whose length differs from the modulus.
ModularColoring modular_scheme(unsigned long modulus,
                               std::vector<std::string> table);

/// Depth-parity coloring over a verified range. Construction enumerates all
/// triples with maximum <= bound and records each maximum's depth; a repeated
/// maximum makes the depth function ill-defined and construction throws
/// std::runtime_error("uniqueness violated; d(m) ill-defined").
class DepthParityColoring final : public ColoringScheme {
 public:
  explicit DepthParityColoring(const Bound& bound, unsigned threads = 1);

  const std::string& name() const override;
  const std::vector<std::string>& labels() const override;  // {"A", "B"}
  /// 0 = A, 1 = B. Throws std::domain_error("out of verified range")
  /// when n exceeds the construction bound.
  std::size_t color_index(const BigNat& n) const override;

  const BigNat& bound() const { return bound_; }
  /// Depth of the unique triple with maximum m, if m is a Markov number
  /// within the verified range.
  std::optional<unsigned> depth_of(const BigNat& m) const;

 private:
  BigNat bound_;
  std::map<BigNat, unsigned> depth_by_max_;
};

/// Depth color of n within the range enumerable up to `bound`. Convenience
/// wrapper that builds a DepthParityColoring per call.
DepthColor depth_color(const BigNat& n, const Bound& bound);

}  // namespace markov
