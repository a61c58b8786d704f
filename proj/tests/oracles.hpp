#pragma once

// Brute-force reference implementations used only by the tests. None of these
// share code paths with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

inline u64 order(u64 a, u64 n) {
  u64 x = a % n;
  u64 t = 1;
  while (x != 1) {
    x = x * (a % n) % n;
    ++t;
  }
  return t;
}

inline bool primitive(u64 g, u64 p) { return g % p != 0 && order(g % p, p) == p - 1; }

inline u64 gcd(u64 a, u64 b) { return b == 0 ? a : gcd(b, a % b); }

// Legendre symbol from the list of nonzero squares.
inline int legendre(long long a, u64 p) {
  const u64 r = static_cast<u64>(((a % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p));
  if (r == 0) return 0;
  for (u64 y = 1; y < p; ++y) {
    if (y * y % p == r) return 1;
  }
  return -1;
}

inline std::vector<int> modified_jacobi_bits(u64 p, u64 q) {
  std::vector<int> s(p * q, 0);
  for (u64 i = 0; i < p * q; ++i) {
    if (i % p == 0 && i % q != 0) {
      s[i] = 1;
    } else if (i % p != 0 && i % q != 0) {
      s[i] = legendre(static_cast<long long>(i), p) * legendre(static_cast<long long>(i), q) == -1 ? 1 : 0;
    }
  }
  return s;
}

inline std::vector<int> random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> v(n);
  for (auto& b : v) b = static_cast<int>(rng() & 1);
  return v;
}

// GF(2) polynomials as mpz bit vectors.
inline mpz_class gf2_mod(mpz_class a, const mpz_class& b) {
  const auto db = mpz_sizeinbase(b.get_mpz_t(), 2);
  while (a != 0 && mpz_sizeinbase(a.get_mpz_t(), 2) >= db) {
    const auto shift = mpz_sizeinbase(a.get_mpz_t(), 2) - db;
    mpz_class t = b;
    t <<= shift;
    a ^= t;
  }
  return a;
}

inline mpz_class gf2_gcd(mpz_class a, mpz_class b) {
  while (b != 0) {
    mpz_class r = gf2_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// N - deg gcd(x^N - 1, S(x)) over GF(2).
inline u64 linear_complexity(const std::vector<int>& s) {
  const u64 n = s.size();
  mpz_class poly = 0;
  for (u64 i = 0; i < n; ++i) {
    if (s[i]) mpz_setbit(poly.get_mpz_t(), i);
  }
  if (poly == 0) return 0;
  mpz_class xn1 = 1;
  xn1 <<= n;
  xn1 |= 1;
  const mpz_class g = gf2_gcd(xn1, poly);
  return n - (mpz_sizeinbase(g.get_mpz_t(), 2) - 1);
}

// Leibniz expansion over all permutations; only for tiny N.
inline long long det_leibniz(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  long long total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    long long prod = sign;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// First k bits of the 2-adic expansion of m/n (n odd).
inline std::vector<int> two_adic_bits(const mpz_class& m, const mpz_class& n, u64 k) {
  mpz_class mod = 1;
  mod <<= k;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
  mpz_class v = m * inv;
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  std::vector<int> bits(k);
  for (u64 i = 0; i < k; ++i) bits[i] = mpz_tstbit(v.get_mpz_t(), i);
  return bits;
}

}  // namespace oracle
