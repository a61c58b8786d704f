#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "seqlab/cyclotomy.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

using cplx = std::complex<double>;

inline constexpr u64 kNumericLimit = 100'000;
inline constexpr u64 kDeterminantOracleLimit = 40;

// Which closed form the even/odd-union Gauss periods take, selected by the
// parity of f*f' and by d mod 4.
enum class PeriodCase : std::uint8_t { FfOdd, FfEvenD0Mod4, FfEvenD2Mod4 };

std::string_view to_string(PeriodCase c);
PeriodCase period_case(const SequenceParams& params);

struct OmegaClosedForm {
  PeriodCase kase = PeriodCase::FfOdd;
  mpq_class product;      // Omega0 * Omega1: (1 - pq)/4 or (1 + pq)/4
  int radicand_sign = 1;  // +1: (1 +- sqrt(pq))/2, -1: (1 +- sqrt(-pq))/2
  std::array<cplx, 2> candidates;  // "+" root first
};

OmegaClosedForm omega_closed_form(const SequenceParams& params);

// Gauss periods eta_i = sum over D_i of exp(2 pi i x / N), in double precision.
struct GaussPeriods {
  std::vector<cplx> etas;
  cplx omega0;  // sum over D0*
  cplx omega1;  // sum over D1*
  cplx sum_P;
  cplx sum_Q;
};

// Throws std::invalid_argument when N exceeds max_n.
GaussPeriods gauss_periods_numeric(const CyclotomicTables& tables, u64 max_n = kNumericLimit);

// Index of the closed-form candidate nearest the numeric Omega0.
std::size_t realized_candidate(const OmegaClosedForm& closed, const GaussPeriods& periods);

enum class SpectrumClass : std::uint8_t { R, D0star, D1star, P, Q };

std::string_view to_string(SpectrumClass c);
SpectrumClass spectrum_class(const SequenceParams& params, u64 a);

struct SpectrumValue {
  SpectrumClass cls = SpectrumClass::R;
  std::optional<mpq_class> exact;  // set for R, P and Q
  cplx value;
};

// Closed form of S(w^a) = sum_i s_i w^(a i) for the modified Jacobi sequence:
// R: (p+1)(q-1)/2, D0*: -Omega0, D1*: -Omega1, P: -(p+1)/2, Q: (q-1)/2.
SpectrumValue spectrum_at(u64 a, const SequenceParams& params, const GaussPeriods& periods);

// Direct numeric evaluation of S(exp(2 pi i a / N)) from the bits.
cplx evaluate_at_root(const BinarySequence& seq, u64 a);

// 2 ((p+1)/2)^q ((q-1)/2)^p (Omega0 Omega1)^((p-1)(q-1)/2) with the exact
// rational product substituted.
mpz_class circulant_det_closed(const SequenceParams& params);

// Fraction-free (Bareiss) determinant of the circulant a_ij = s_{(i-j) mod N}.
// Throws std::invalid_argument when N exceeds max_n.
mpz_class circulant_det_exact(const BinarySequence& seq, u64 max_n = kDeterminantOracleLimit);

struct SpectralProfile {
  SequenceParams params;
  GaussPeriods periods;
  OmegaClosedForm closed;
  std::size_t realized = 0;
  std::array<SpectrumValue, 5> spectrum;  // indexed by SpectrumClass
  mpz_class det_closed;
};

SpectralProfile spectral_profile(const CyclotomicTables& tables);

}  // namespace seqlab
