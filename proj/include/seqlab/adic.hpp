#pragma once

#include <optional>

#include <gmpxx.h>

#include "seqlab/cyclotomy.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

// S(2) = sum_i s_i 2^i, exact.
mpz_class s_of_2(const BinarySequence& seq);

// Bit length of a positive integer minus one, i.e. floor(log2 v).
u64 floor_log2(const mpz_class& v);

struct AdicReport {
  u64 N = 0;
  mpz_class S2;
  mpz_class modulus;  // 2^N - 1
  mpz_class g;        // gcd(S2, 2^N - 1)
  u64 phi2 = 0;       // floor(log2((2^N - 1) / g))
  bool degenerate = false;  // all-zero input; phi2 = 0 by convention
  bool maximal = false;     // phi2 == floor(log2(2^N - 1)) = N - 1

  // Filled only when the sequence carries prime-pair parameters.
  std::optional<i64> bound;  // pq - p - q - 1
  std::optional<bool> bound_holds;
  std::optional<bool> gcd_divides_mersenne_product;  // g | (2^p - 1)(2^q - 1)
};

AdicReport two_adic_complexity(const BinarySequence& seq);

struct BoundVerdict {
  i64 bound = 0;
  bool holds = false;
  bool twin_prime = false;          // q == p + 2
  bool twin_prime_maximal = false;  // twin case and phi2 == N - 1
};

BoundVerdict bound_verdict(const SequenceParams& params, const AdicReport& report);

// How g = gcd(S(2), 2^N - 1) splits across 2^p - 1 and 2^q - 1.
struct GcdDiagnostics {
  mpz_class g_p;  // gcd(g, 2^p - 1)
  mpz_class g_q;  // gcd(g, 2^q - 1)
  bool divides_product = false;  // g | (2^p - 1)(2^q - 1), equivalently g == g_p * g_q
  mpz_class cofactor_gcd;        // gcd(g, (2^N - 1) / ((2^p - 1)(2^q - 1)))
  mpz_class mersenne_correction;  // gcd(2^p - 1, q)
  bool cofactor_within_correction = false;  // cofactor_gcd | mersenne_correction
  bool ok() const { return divides_product && cofactor_within_correction; }
};

GcdDiagnostics gcd_structure(const SequenceParams& params, const AdicReport& report);

}  // namespace seqlab
