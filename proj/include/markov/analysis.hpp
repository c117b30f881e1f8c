#pragma once

#include "markov/coloring.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace markov {

/// Valuation pattern of the three inputs, sorted descending (v1 >= v2 >= v3):
///   Case1: v1 = v2 = v3,  Case2: v1 > v2 = v3,  Case3: v2 > v3.
enum class ValuationCase { Case1, Case2, Case3 };

const char* to_string(ValuationCase c);

/// For x, y, z all in the same class B_i, with P = x^2 + y^2 + z^2 and
/// Q = 3xyz, both P - 3 and Q - 3 have 5-adic valuation exactly
/// v = min of the valuations of x-1, y-1, z-1. The profile records the
/// mod-5 residues of lambda = (P-3)/5^v and mu = (Q-3)/5^v.
struct CongruenceProfile {
  unsigned i;  // common B_i index, in {1, 2, 3, 4}
  unsigned long v;
  unsigned lambda_mod5;
  unsigned mu_mod5;
  ValuationCase case_id;
};

/// Inputs need not solve the Markov equation; the congruences are
/// unconditional. Throws std::domain_error("profile undefined outside B_i")
/// unless all three inputs lie in one class B_i.
CongruenceProfile congruence_profile(const BigNat& x, const BigNat& y,
                                     const BigNat& z);

/// Predicted (lambda, mu) residues mod 5 for class B_i and a case:
///   Case1 -> (i, 4i),  Case2 -> (4i, i),  Case3 -> (2i, 3i).
unsigned predicted_lambda(ValuationCase c, unsigned i);
unsigned predicted_mu(ValuationCase c, unsigned i);

struct CaseRow {
  unsigned i;
  ValuationCase case_id;
  unsigned predicted_lambda;
  unsigned predicted_mu;
  unsigned observed_lambda;
  unsigned observed_mu;
  std::size_t samples;
  bool pass;
  /// First witness whose profile disagreed with the prediction, if any.
  std::optional<std::array<BigNat, 3>> counterexample;
};

struct CaseTable {
  std::vector<CaseRow> rows;  // 12 rows: i in {1..4} x {Case1, Case2, Case3}
  bool all_pass;
};

/// Checks every (i, case) row on one constructed witness plus at least 100
/// seeded pseudorandom witnesses (valuations in [1,4], cofactors up to 10^6),
/// and that lambda and mu residues differ in every row.
CaseTable verify_case_table();

struct AClassRow {
  unsigned i;
  unsigned sum_residue;      // 3i^2 mod 5
  unsigned product_residue;  // 3i^3 mod 5
  bool pass;                 // residues differ
};

struct AClassReport {
  std::vector<AClassRow> rows;  // i = 2, 3, 4
  /// (0,0,0) does satisfy the equation mod 5; A_0 is excluded by
  /// gcd(x,y,z) = 1, not by a residue mismatch.
  bool zero_triple_is_residue_solution;
  bool all_pass;
};

AClassReport verify_A_classes();

struct ResidueTriple {
  unsigned long a, b, c;  // a <= b <= c
  friend bool operator==(const ResidueTriple& p, const ResidueTriple& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c;
  }
};

struct ResidueSolutionSet {
  unsigned long modulus;
  std::vector<ResidueTriple> solutions;  // lexicographic
  bool contains(unsigned long a, unsigned long b, unsigned long c) const;
};

/// All unordered residue triples with a^2 + b^2 + c^2 == 3abc (mod modulus),
/// by exhaustive scan. Modulus limited to [2, 1000].
ResidueSolutionSet residue_solutions(unsigned long modulus);

struct BlockingRow {
  unsigned long a, b, c;
  std::string class_label;
  /// Some prime dividing the modulus divides a, b and c; such a solution
  /// cannot lift to a triple with gcd(x,y,z) = 1.
  bool discounted;
};

struct BlockingReport {
  unsigned long modulus;
  std::string scheme;
  std::vector<BlockingRow> rows;  // monochromatic residue solutions
  bool blocks;                    // no live (non-discounted) row
};

/// Monochromatic residue solutions of the scheme's modulus, each flagged
/// discounted or live. Throws std::invalid_argument("modulus mismatch") if
/// `modulus` differs from the scheme's.
BlockingReport blocking_report(const ModularColoring& scheme,
                               unsigned long modulus);

}  // namespace markov
