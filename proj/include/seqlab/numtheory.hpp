#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace seqlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// (a * b) mod m without overflow for any 64-bit operands.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

// Distinct prime factors in increasing order (trial division).
std::vector<u64> prime_factors(u64 n);

u64 gcd_u64(u64 a, u64 b);

// Smallest t >= 1 with a^t = 1 (mod n). Throws std::invalid_argument
// when gcd(a, n) != 1 or n < 2.
u64 multiplicative_order(u64 a, u64 n);

bool is_primitive_root(u64 g, u64 p);

// A validated pair of distinct odd primes with p < q.
class PrimePair {
 public:
  // Throws std::invalid_argument naming the offending parameter.
  PrimePair(u64 p, u64 q);

  u64 p() const { return p_; }
  u64 q() const { return q_; }
  u64 modulus() const { return p_ * q_; }

  friend bool operator==(const PrimePair&, const PrimePair&) = default;

 private:
  u64 p_;
  u64 q_;
};

// Smallest g >= 2 that is a primitive root modulo both p and q.
u64 common_primitive_root(const PrimePair& pair);

// Unique x in [0, pq) with x = g (mod p), x = 1 (mod q).
u64 whiteman_x(const PrimePair& pair, u64 g);

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre_symbol(i64 a, u64 p);

struct MersenneGcdSplit {
  mpz_class gp;  // gcd(2^p - 1, (2^N - 1) / (2^p - 1))
  mpz_class gq;  // gcd(2^q - 1, (2^N - 1) / (2^q - 1))
};

mpz_class mersenne(u64 n);  // 2^n - 1

MersenneGcdSplit mersenne_gcd_split(const PrimePair& pair);

}  // namespace seqlab
