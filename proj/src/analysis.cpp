#include "markov/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace markov {

namespace {

BigNat pow5(unsigned long v) {
  BigNat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, v);
  return r;
}

// B_i index of n, or 0 if n is not in any B class.
unsigned b_class_index(const BigNat& n) {
  if (n < 1) return 0;
  switch (ninefold_color(n)) {
    case ColorClass::B1: return 1;
    case ColorClass::B2: return 2;
    case ColorClass::B3: return 3;
    case ColorClass::B4: return 4;
    default: return 0;
  }
}

ValuationCase classify_valuations(unsigned long vx, unsigned long vy,
                                  unsigned long vz) {
  std::array<unsigned long, 3> s{vx, vy, vz};
  std::sort(s.begin(), s.end(), std::greater<>());
  if (s[0] == s[2]) return ValuationCase::Case1;
  if (s[1] == s[2]) return ValuationCase::Case2;
  return ValuationCase::Case3;
}

}  // namespace

const char* to_string(ValuationCase c) {
  switch (c) {
    case ValuationCase::Case1: return "Case1";
    case ValuationCase::Case2: return "Case2";
    default: return "Case3";
  }
}

CongruenceProfile congruence_profile(const BigNat& x, const BigNat& y,
                                     const BigNat& z) {
  unsigned ix = b_class_index(x);
  unsigned iy = b_class_index(y);
  unsigned iz = b_class_index(z);
  if (ix == 0 || ix != iy || iy != iz)
    throw std::domain_error("profile undefined outside B_i");

  ValuationDecomposition dx = valuation5(x - 1);
  ValuationDecomposition dy = valuation5(y - 1);
  ValuationDecomposition dz = valuation5(z - 1);
  unsigned long v = std::min({dx.v, dy.v, dz.v});

  BigNat p = x * x + y * y + z * z;
  BigNat q = 3 * x * y * z;
  BigNat scale = pow5(v);
  BigNat lambda, mu;
  // Every term of P-3 and Q-3 carries at least 5^v, so the division is exact.
  mpz_divexact(lambda.get_mpz_t(), BigNat(p - 3).get_mpz_t(),
               scale.get_mpz_t());
  mpz_divexact(mu.get_mpz_t(), BigNat(q - 3).get_mpz_t(), scale.get_mpz_t());

  CongruenceProfile profile;
  profile.i = ix;
  profile.v = v;
  profile.lambda_mod5 =
      static_cast<unsigned>(mpz_fdiv_ui(lambda.get_mpz_t(), 5));
  profile.mu_mod5 = static_cast<unsigned>(mpz_fdiv_ui(mu.get_mpz_t(), 5));
  profile.case_id = classify_valuations(dx.v, dy.v, dz.v);
  return profile;
}

unsigned predicted_lambda(ValuationCase c, unsigned i) {
  switch (c) {
    case ValuationCase::Case1: return i % 5;
    case ValuationCase::Case2: return 4 * i % 5;
    default: return 2 * i % 5;
  }
}

unsigned predicted_mu(ValuationCase c, unsigned i) {
  switch (c) {
    case ValuationCase::Case1: return 4 * i % 5;
    case ValuationCase::Case2: return i % 5;
    default: return 3 * i % 5;
  }
}

namespace {

BigNat b_element(unsigned long v, unsigned long m) { return pow5(v) * m + 1; }

std::array<BigNat, 3> constructed_witness(ValuationCase c, unsigned i) {
  switch (c) {
    case ValuationCase::Case1:
      return {b_element(1, i), b_element(1, i), b_element(1, i)};
    case ValuationCase::Case2:
      return {b_element(2, i), b_element(1, i), b_element(1, i)};
    default:
      return {b_element(2, i), b_element(2, i), b_element(1, i)};
  }
}

std::array<BigNat, 3> random_witness(std::mt19937_64& rng, ValuationCase c,
                                     unsigned i) {
  auto uniform = [&rng](unsigned long lo, unsigned long hi) {
    return std::uniform_int_distribution<unsigned long>(lo, hi)(rng);
  };
  // Cofactor in [1, 10^6] congruent to i mod 5.
  auto cofactor = [&] { return 5 * uniform(0, 199999) + i; };

  std::array<unsigned long, 3> vals{};
  switch (c) {
    case ValuationCase::Case1: {
      unsigned long v = uniform(1, 4);
      vals = {v, v, v};
      break;
    }
    case ValuationCase::Case2: {
      unsigned long v = uniform(1, 3);
      vals = {uniform(v + 1, 4), v, v};
      break;
    }
    default: {
      unsigned long v = uniform(1, 3);
      unsigned long mid = uniform(v + 1, 4);
      vals = {uniform(mid, 4), mid, v};
      break;
    }
  }
  std::array<BigNat, 3> witness{b_element(vals[0], cofactor()),
                                b_element(vals[1], cofactor()),
                                b_element(vals[2], cofactor())};
  std::shuffle(witness.begin(), witness.end(), rng);
  return witness;
}

constexpr std::size_t kRandomWitnessesPerRow = 100;

}  // namespace

CaseTable verify_case_table() {
  std::mt19937_64 rng(0x6d61726b6f76ULL);
  CaseTable table;
  table.all_pass = true;
  for (unsigned i = 1; i <= 4; ++i) {
    for (ValuationCase c : {ValuationCase::Case1, ValuationCase::Case2,
                            ValuationCase::Case3}) {
      CaseRow row;
      row.i = i;
      row.case_id = c;
      row.predicted_lambda = predicted_lambda(c, i);
      row.predicted_mu = predicted_mu(c, i);
      row.samples = 0;
      row.pass = row.predicted_lambda != row.predicted_mu;

      auto check = [&row, c, i](const std::array<BigNat, 3>& w) {
        CongruenceProfile p = congruence_profile(w[0], w[1], w[2]);
        ++row.samples;
        bool ok = p.i == i && p.case_id == c &&
                  p.lambda_mod5 == row.predicted_lambda &&
                  p.mu_mod5 == row.predicted_mu &&
                  p.lambda_mod5 != p.mu_mod5;
        if (!ok && !row.counterexample) row.counterexample = w;
        return p;
      };

      std::array<BigNat, 3> base = constructed_witness(c, i);
      CongruenceProfile base_profile = check(base);
      row.observed_lambda = base_profile.lambda_mod5;
      row.observed_mu = base_profile.mu_mod5;
      for (std::size_t s = 0; s < kRandomWitnessesPerRow; ++s) {
        check(random_witness(rng, c, i));
      }
      row.pass = row.pass && !row.counterexample;
      table.all_pass = table.all_pass && row.pass;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

AClassReport verify_A_classes() {
  AClassReport report;
  report.all_pass = true;
  for (unsigned i : {2u, 3u, 4u}) {
    AClassRow row;
    row.i = i;
    row.sum_residue = 3 * i * i % 5;
    row.product_residue = 3 * i * i * i % 5;
    row.pass = row.sum_residue != row.product_residue;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  }
  report.zero_triple_is_residue_solution =
      (0 + 0 + 0) % 5 == 3 * 0 * 0 * 0 % 5;
  return report;
}

bool ResidueSolutionSet::contains(unsigned long a, unsigned long b,
                                  unsigned long c) const {
  ResidueTriple key{a, b, c};
  return std::find(solutions.begin(), solutions.end(), key) != solutions.end();
}

ResidueSolutionSet residue_solutions(unsigned long modulus) {
  if (modulus < 2 || modulus > 1000)
    throw std::domain_error("modulus out of range [2, 1000]");
  ResidueSolutionSet out{modulus, {}};
  for (unsigned long a = 0; a < modulus; ++a) {
    for (unsigned long b = a; b < modulus; ++b) {
      for (unsigned long c = b; c < modulus; ++c) {
        if ((a * a + b * b + c * c) % modulus == 3 * a * b * c % modulus)
          out.solutions.push_back({a, b, c});
      }
    }
  }
  return out;
}

namespace {

std::vector<unsigned long> distinct_prime_factors(unsigned long n) {
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

BlockingReport blocking_report(const ModularColoring& scheme,
                               unsigned long modulus) {
  if (scheme.modulus() != modulus)
    throw std::invalid_argument("modulus mismatch");
  ResidueSolutionSet sols = residue_solutions(modulus);
  std::vector<unsigned long> primes = distinct_prime_factors(modulus);

  BlockingReport report{modulus, scheme.name(), {}, true};
  for (const ResidueTriple& s : sols.solutions) {
    std::size_t ca = scheme.residue_class(s.a);
    if (ca != scheme.residue_class(s.b) || ca != scheme.residue_class(s.c))
      continue;
    bool discounted = false;
    for (unsigned long p : primes) {
      if (s.a % p == 0 && s.b % p == 0 && s.c % p == 0) {
        discounted = true;
        break;
      }
    }
    report.rows.push_back({s.a, s.b, s.c, scheme.labels()[ca], discounted});
    if (!discounted) report.blocks = false;
  }
  return report;
}

}  // namespace markov
