#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "seqlab/adic.hpp"
#include "seqlab/attack.hpp"

using namespace seqlab;

namespace {

BinarySequence mj(u64 p, u64 q) { return generate_modified_jacobi(build_params(PrimePair(p, q))); }

}  // namespace

TEST_CASE("periodic_prefix") {
  const auto s = BinarySequence::from_string("101");
  CHECK(periodic_prefix(s, 8).to_string() == "10110110");
  CHECK(periodic_prefix(s, 2).to_string() == "10");
}

TEST_CASE("RAA on simple prefixes") {
  const auto zero = raa_approximate(BinarySequence(16, SequenceSource::External));
  CHECK(zero.numerator == 0);
  CHECK(zero.denominator == 1);

  // 1,0,1,0,... = 1/(1 - 4) = -1/3
  const auto a = raa_approximate(BinarySequence::from_string("1010101010101010"));
  CHECK(a.numerator == -1);
  CHECK(a.denominator == 3);
  // 0,1,0,1,... = 2/(1 - 4) = -2/3
  const auto b = raa_approximate(BinarySequence::from_string("0101010101010101"));
  CHECK(b.numerator == -2);
  CHECK(b.denominator == 3);
  // All ones: -1
  const auto c = raa_approximate(BinarySequence::from_string("11111111"));
  CHECK(c.numerator == -1);
  CHECK(c.denominator == 1);

  CHECK_THROWS_AS(raa_approximate(BinarySequence::from_string("1")), std::invalid_argument);
  CHECK_THROWS_AS(raa_approximate(BinarySequence()), std::invalid_argument);
}

TEST_CASE("RAA recovers the (3,5) sequence") {
  const auto seq = mj(3, 5);
  const auto target = periodic_rational(seq);
  CHECK(target.numerator == -31432);
  CHECK(target.denominator == 32767);
  const auto got = raa_approximate(periodic_prefix(seq, 2 * 15 + 4));
  CHECK(got == target);
  CHECK(matches_prefix(got, periodic_prefix(seq, 34)));
}

TEST_CASE("RAA output satisfies the prefix congruence") {
  std::mt19937_64 rng(13);
  for (std::size_t k : {2, 3, 8, 31, 64, 65, 150, 300}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto prefix = BinarySequence::from_bits(oracle::random_bits(rng, k));
      const auto r = raa_approximate(prefix);
      REQUIRE(matches_prefix(r, prefix));
      CHECK(mpz_odd_p(r.denominator.get_mpz_t()));
      CHECK(r.denominator > 0);
      CHECK(gcd(r.numerator, r.denominator) == 1);
      CHECK(r.prefix_len == k);
      CHECK(r.size_measure() < k);
    }
  }
}

TEST_CASE("RAA recovers random rationals from enough bits") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const long n = static_cast<long>(rng() % 100000) * 2 + 1;
    const long m = static_cast<long>(rng() % 200001) - 100000;
    mpz_class mm = m, nn = n;
    const mpz_class g = gcd(mm, nn);
    mm /= g;
    nn /= g;
    const u64 k = 2 * 18 + 2;
    const auto bits = oracle::two_adic_bits(mm, nn, k);
    const auto r = raa_approximate(BinarySequence::from_bits(bits));
    REQUIRE(r.numerator == mm);
    REQUIRE(r.denominator == nn);
  }
}

TEST_CASE("RAA recovers periodic sequences from 2N + 4 bits") {
  for (auto [p, q] : {std::pair<u64, u64>{3, 5}, {3, 7}, {5, 7}, {3, 11}, {3, 13}, {7, 13}, {3, 29}}) {
    const auto seq = mj(p, q);
    const auto target = periodic_rational(seq);
    CHECK(raa_approximate(periodic_prefix(seq, 2 * seq.size() + 4)) == target);
    // Reduced: the denominator is (2^N - 1) / g.
    const auto rep = two_adic_complexity(seq);
    CHECK(target.denominator == rep.modulus / rep.g);
  }
}

TEST_CASE("Berlekamp-Massey") {
  CHECK(berlekamp_massey(BinarySequence(20, SequenceSource::External)) == 0);
  BinarySequence impulse(15, SequenceSource::External);
  impulse.set(0, true);
  CHECK(berlekamp_massey(impulse) == 15);
  CHECK(berlekamp_massey(BinarySequence::from_string("1111")) == 1);
  CHECK(berlekamp_massey(mj(3, 5)) == 4);
  CHECK(berlekamp_massey(mj(3, 7)) == 14);
  CHECK(berlekamp_massey(mj(5, 7)) == 34);
  CHECK(berlekamp_massey(mj(3, 11)) == 12);
  CHECK(berlekamp_massey(mj(11, 13)) == 60);

  // s_{n+5} = s_{n+2} + s_n
  std::vector<int> m(62);
  m[0] = 1;
  for (std::size_t i = 5; i < m.size(); ++i) m[i] = m[i - 3] ^ m[i - 5];
  CHECK(berlekamp_massey_finite(BinarySequence::from_bits(m)) == 5);
}

TEST_CASE("Berlekamp-Massey agrees with the GF(2) gcd oracle") {
  std::mt19937_64 rng(19);
  for (std::size_t n : {1, 2, 7, 15, 31, 63, 64, 65, 100, 255}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto bits = oracle::random_bits(rng, n);
      REQUIRE(berlekamp_massey(BinarySequence::from_bits(bits)) == oracle::linear_complexity(bits));
    }
  }
  for (u64 p = 3; p < 30; p += 2) {
    for (u64 q = p + 2; q * p <= 255; q += 2) {
      if (!oracle::is_prime(p) || !oracle::is_prime(q)) continue;
      REQUIRE(berlekamp_massey(mj(p, q)) == oracle::linear_complexity(oracle::modified_jacobi_bits(p, q)));
    }
  }
}

TEST_CASE("attack report") {
  const auto r = attack_report(mj(3, 5));
  CHECK(r.N == 15);
  CHECK(r.phi2 == 14);
  CHECK(r.passes);
  CHECK(r.raa_recovered);
  REQUIRE(r.linear_complexity.has_value());
  CHECK(*r.linear_complexity == 4);
  CHECK_FALSE(*r.linear_passes);
  REQUIRE(r.bound.has_value());
  CHECK(*r.bound == 6);
  REQUIRE(r.raa_min_prefix.has_value());
  const u64 k = *r.raa_min_prefix;
  CHECK(k <= 34);
  const auto seq = mj(3, 5);
  for (u64 j = k; j <= 34; ++j) CHECK(raa_approximate(periodic_prefix(seq, j)) == r.target);
  CHECK_FALSE(raa_approximate(periodic_prefix(seq, k - 1)) == r.target);

  const auto z = attack_report(BinarySequence(15, SequenceSource::External));
  CHECK(z.degenerate);
  CHECK_FALSE(z.passes);

  const auto no_lc = attack_report(mj(3, 5), 10);
  CHECK_FALSE(no_lc.linear_complexity.has_value());
  CHECK_FALSE(no_lc.linear_passes.has_value());
}
