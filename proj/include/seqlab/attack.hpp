#pragma once

#include <optional>

#include <gmpxx.h>

#include "seqlab/sequence.hpp"

namespace seqlab {

// m/n with n odd and positive, gcd(|m|, n) = 1, whose 2-adic expansion
// agrees with the first prefix_len bits it was built from.
struct RationalApprox {
  mpz_class numerator;
  mpz_class denominator;
  u64 prefix_len = 0;

  // floor(log2 max(|m|, n))
  u64 size_measure() const;

  friend bool operator==(const RationalApprox& a, const RationalApprox& b) {
    return a.numerator == b.numerator && a.denominator == b.denominator;
  }
};

// First k bits of the periodic extension of seq.
BinarySequence periodic_prefix(const BinarySequence& seq, u64 k);

// Rational reconstruction of alpha = sum b_i 2^i mod 2^k: reduces the lattice
// { (m, n) : m = n alpha mod 2^k } with a Lagrange-Gauss step and returns the
// smallest short combination with odd n. Throws std::invalid_argument for k < 2.
RationalApprox raa_approximate(const BinarySequence& prefix);

// Exact check of m = n * alpha (mod 2^k).
bool matches_prefix(const RationalApprox& approx, const BinarySequence& prefix);

// Reduced -S(2)/(2^N - 1), the 2-adic value of the periodic sequence.
RationalApprox periodic_rational(const BinarySequence& seq);

// Linear complexity of a finite bit string over GF(2).
u64 berlekamp_massey_finite(const BinarySequence& bits);

// Linear complexity of the periodic sequence (Berlekamp-Massey on two periods).
u64 berlekamp_massey(const BinarySequence& seq);

inline constexpr u64 kLinearComplexityLimit = 200'000;

struct AttackReport {
  u64 N = 0;
  u64 phi2 = 0;
  bool degenerate = false;
  std::optional<u64> linear_complexity;  // omitted above kLinearComplexityLimit
  RationalApprox target;                 // reduced -S(2)/(2^N - 1)
  bool raa_recovered = false;            // exact recovery from 2N + 4 bits
  std::optional<u64> raa_min_prefix;     // smallest k with recovery for every length in [k, 2N + 4]
  bool passes = false;                   // 2-adic complexity >= N/2
  std::optional<bool> linear_passes;     // linear complexity >= N/2
  std::optional<i64> bound;              // pq - p - q - 1 when parameters are known
};

AttackReport attack_report(const BinarySequence& seq, u64 lc_limit = kLinearComplexityLimit);

}  // namespace seqlab
