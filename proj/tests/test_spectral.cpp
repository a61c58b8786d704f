#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "seqlab/spectral.hpp"

using namespace seqlab;

namespace {

SequenceParams params_of(u64 p, u64 q) { return build_params(PrimePair(p, q)); }

std::vector<std::vector<long long>> circulant(const std::vector<int>& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = s[(i + n - j) % n];
  }
  return m;
}

}  // namespace

TEST_CASE("closed-form Gauss period products") {
  const auto a = omega_closed_form(params_of(3, 5));
  CHECK(a.kase == PeriodCase::FfEvenD2Mod4);
  CHECK(a.product == mpq_class(4));
  CHECK(a.radicand_sign == -1);
  CHECK(a.candidates[0].real() == doctest::Approx(0.5));
  CHECK(a.candidates[0].imag() == doctest::Approx(std::sqrt(15.0) / 2));

  const auto b = omega_closed_form(params_of(3, 7));
  CHECK(b.kase == PeriodCase::FfOdd);
  CHECK(b.product == mpq_class(-5));
  CHECK(b.radicand_sign == 1);

  const auto c = omega_closed_form(params_of(13, 17));
  CHECK(c.kase == PeriodCase::FfEvenD0Mod4);
  CHECK(c.product == mpq_class(-55));
  CHECK(to_string(c.kase) == "ff-even-d0mod4");
}

TEST_CASE("numeric Gauss periods") {
  for (auto [p, q] : {std::pair<u64, u64>{3, 5}, {3, 7}, {5, 7}, {13, 17}, {7, 13}, {5, 13}, {17, 41}}) {
    const auto params = params_of(p, q);
    const auto t = build_tables(params);
    const auto gp = gauss_periods_numeric(t);
    cplx total = 0;
    for (const auto& e : gp.etas) total += e;
    CHECK(std::abs(total - cplx(1, 0)) < 1e-9);
    CHECK(std::abs(gp.sum_P - cplx(-1, 0)) < 1e-9);
    CHECK(std::abs(gp.sum_Q - cplx(-1, 0)) < 1e-9);
    CHECK(std::abs(gp.omega0 + gp.omega1 - cplx(1, 0)) < 1e-9);
    const auto closed = omega_closed_form(params);
    const cplx prod = gp.omega0 * gp.omega1;
    CHECK(std::abs(prod - cplx(closed.product.get_d(), 0)) < 1e-6);
    const auto k = realized_candidate(closed, gp);
    CHECK(std::abs(gp.omega0 - closed.candidates[k]) < 1e-6);
    CHECK(std::abs(gp.omega1 - closed.candidates[1 - k]) < 1e-6);
  }
  const auto t = build_tables(params_of(3, 5));
  CHECK_THROWS_AS(gauss_periods_numeric(t, 10), std::invalid_argument);
}

TEST_CASE("spectrum values for (3,5)") {
  const auto params = params_of(3, 5);
  const auto gp = gauss_periods_numeric(build_tables(params));
  auto v0 = spectrum_at(0, params, gp);
  CHECK(v0.cls == SpectrumClass::R);
  CHECK(*v0.exact == mpq_class(8));
  auto v3 = spectrum_at(3, params, gp);
  CHECK(v3.cls == SpectrumClass::P);
  CHECK(*v3.exact == mpq_class(-2));
  auto v5 = spectrum_at(5, params, gp);
  CHECK(v5.cls == SpectrumClass::Q);
  CHECK(*v5.exact == mpq_class(2));
  auto v1 = spectrum_at(1, params, gp);
  CHECK_FALSE(v1.exact.has_value());
  CHECK(v1.value.real() == doctest::Approx(-0.5));
  CHECK(v1.value.imag() == doctest::Approx(-1.936492).epsilon(1e-6));
}

TEST_CASE("spectrum closed form matches direct evaluation") {
  for (auto [p, q] : {std::pair<u64, u64>{3, 5}, {3, 7}, {5, 7}, {3, 11}, {7, 13}, {5, 13}}) {
    const auto params = params_of(p, q);
    const auto gp = gauss_periods_numeric(build_tables(params));
    const auto seq = generate_modified_jacobi(params);
    for (u64 a = 0; a < params.N; ++a) {
      const cplx direct = evaluate_at_root(seq, a);
      REQUIRE(std::abs(direct - spectrum_at(a, params, gp).value) < 1e-8 * static_cast<double>(params.N));
    }
  }
}

TEST_CASE("circulant determinant closed form") {
  CHECK(circulant_det_closed(params_of(3, 5)) == 131072);
  CHECK(circulant_det_closed(params_of(3, 7)) == 108000000);
  CHECK(circulant_det_closed(params_of(3, 11)) == mpz_class("549755813888000"));
  CHECK(circulant_det_closed(params_of(5, 7)) == mpz_class("300189270593998242"));
}

TEST_CASE("exact circulant determinant") {
  for (auto [p, q] : {std::pair<u64, u64>{3, 5}, {3, 7}, {3, 11}, {5, 7}}) {
    const auto params = params_of(p, q);
    CHECK(circulant_det_exact(generate_modified_jacobi(params)) == circulant_det_closed(params));
  }
  CHECK(circulant_det_exact(BinarySequence::from_string("000")) == 0);
  CHECK(circulant_det_exact(BinarySequence::from_string("100")) == 1);
  CHECK(circulant_det_exact(BinarySequence::from_string("110")) == 2);
  CHECK(circulant_det_exact(BinarySequence::from_string("1")) == 1);
  const auto big = generate_modified_jacobi(params_of(5, 11));
  CHECK_THROWS_AS(circulant_det_exact(big), std::invalid_argument);
  CHECK_NOTHROW(circulant_det_exact(big, 60));
}

TEST_CASE("Bareiss agrees with permutation expansion") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      const auto bits = oracle::random_bits(rng, n);
      const auto det = circulant_det_exact(BinarySequence::from_bits(bits));
      REQUIRE(det == mpz_class(static_cast<long>(oracle::det_leibniz(circulant(bits)))));
    }
  }
}

TEST_CASE("spectral profile") {
  const auto prof = spectral_profile(build_tables(params_of(3, 5)));
  CHECK(prof.det_closed == 131072);
  CHECK(*prof.spectrum[static_cast<std::size_t>(SpectrumClass::P)].exact == mpq_class(-2));
  CHECK(*prof.spectrum[static_cast<std::size_t>(SpectrumClass::Q)].exact == mpq_class(2));
  CHECK(*prof.spectrum[static_cast<std::size_t>(SpectrumClass::R)].exact == mpq_class(8));
}
