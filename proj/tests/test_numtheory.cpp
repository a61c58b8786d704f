#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "seqlab/numtheory.hpp"

using namespace seqlab;

TEST_CASE("is_prime small values") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(32767));  // 7 * 31 * 151
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  for (u64 n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("is_prime large and adversarial values") {
  CHECK(is_prime((u64{1} << 61) - 1));
  CHECK(is_prime(18446744073709551557ULL));  // largest prime below 2^64
  CHECK_FALSE(is_prime(561));                // Carmichael
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(2, 15) == 4);
  CHECK(multiplicative_order(1, 7) == 1);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK_THROWS_AS(multiplicative_order(3, 15), std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_order(1, 1), std::invalid_argument);
  for (u64 n = 2; n < 300; ++n) {
    for (u64 a = 1; a < n; ++a) {
      if (oracle::gcd(a, n) == 1) REQUIRE(multiplicative_order(a, n) == oracle::order(a, n));
    }
  }
}

TEST_CASE("PrimePair validation") {
  CHECK_NOTHROW(PrimePair(3, 5));
  CHECK_THROWS_WITH_AS(PrimePair(4, 5), "p must be an odd prime", std::invalid_argument);
  CHECK_THROWS_WITH_AS(PrimePair(2, 5), "p must be an odd prime", std::invalid_argument);
  CHECK_THROWS_WITH_AS(PrimePair(3, 9), "q must be an odd prime", std::invalid_argument);
  CHECK_THROWS_AS(PrimePair(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(PrimePair(5, 5), std::invalid_argument);
}

TEST_CASE("common_primitive_root is the smallest common generator") {
  CHECK(common_primitive_root(PrimePair(3, 5)) == 2);
  CHECK(common_primitive_root(PrimePair(5, 7)) == 3);
  CHECK(common_primitive_root(PrimePair(3, 7)) == 5);
  CHECK(common_primitive_root(PrimePair(13, 17)) == 6);
  for (u64 p = 3; p < 60; p += 2) {
    for (u64 q = p + 2; q < 60; q += 2) {
      if (!oracle::is_prime(p) || !oracle::is_prime(q)) continue;
      const u64 g = common_primitive_root(PrimePair(p, q));
      u64 brute = 2;
      while (!(oracle::primitive(brute, p) && oracle::primitive(brute, q))) ++brute;
      CHECK(g == brute);
    }
  }
}

TEST_CASE("whiteman_x lifts by CRT") {
  CHECK(whiteman_x(PrimePair(3, 5), 2) == 11);
  CHECK(whiteman_x(PrimePair(5, 7), 3) == 8);
  CHECK(whiteman_x(PrimePair(3, 7), 5) == 8);
  CHECK(whiteman_x(PrimePair(13, 17), 6) == 188);
}

TEST_CASE("order of g mod N is L and g^t x^i enumerate distinct units") {
  for (auto [p, q] : {std::pair<u64, u64>{3, 5}, {5, 7}, {7, 13}, {13, 17}, {11, 23}, {17, 41}}) {
    const PrimePair pair(p, q);
    const u64 g = common_primitive_root(pair);
    const u64 d = gcd_u64(p - 1, q - 1);
    const u64 L = (p - 1) * (q - 1) / d;
    CHECK(multiplicative_order(g, p * q) == L);
    const u64 x = whiteman_x(pair, g);
    std::vector<bool> seen(p * q, false);
    u64 xi = 1;
    for (u64 i = 0; i < d; ++i) {
      u64 e = xi;
      for (u64 t = 0; t < L; ++t) {
        REQUIRE_FALSE(seen[e]);
        seen[e] = true;
        e = e * g % (p * q);
      }
      xi = xi * x % (p * q);
    }
  }
}

TEST_CASE("legendre_symbol") {
  CHECK(legendre_symbol(1, 3) == 1);
  CHECK(legendre_symbol(2, 5) == -1);
  CHECK(legendre_symbol(10, 5) == 0);
  CHECK(legendre_symbol(-1, 5) == 1);
  CHECK(legendre_symbol(-1, 7) == -1);
  for (u64 p : {3, 5, 7, 11, 13, 101, 211}) {
    for (i64 a = -20; a < static_cast<i64>(p) + 20; ++a) REQUIRE(legendre_symbol(a, p) == oracle::legendre(a, p));
  }
}

TEST_CASE("mersenne_gcd_split examples") {
  auto s = mersenne_gcd_split(PrimePair(3, 5));
  CHECK(s.gp == 1);
  CHECK(s.gq == 1);
  s = mersenne_gcd_split(PrimePair(5, 7));
  CHECK(s.gp == 1);
  CHECK(s.gq == 1);
  s = mersenne_gcd_split(PrimePair(11, 23));
  CHECK(s.gp == 23);  // 2047 = 23 * 89
  CHECK(s.gq == 1);
  CHECK(mersenne(11) == 2047);
}

TEST_CASE("mersenne_gcd_split matches gcd(2^p - 1, q) for small pairs") {
  for (u64 p = 3; p < 80; p += 2) {
    for (u64 q = p + 2; q < 80; q += 2) {
      if (!oracle::is_prime(p) || !oracle::is_prime(q)) continue;
      const auto s = mersenne_gcd_split(PrimePair(p, q));
      CHECK(s.gp == gcd(mersenne(p), mpz_class(static_cast<unsigned long>(q))));
      CHECK(s.gq == 1);
    }
  }
}
