#include "seqlab/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace seqlab {

namespace {

// w[k] = exp(2 pi i k / n)
std::vector<cplx> roots_of_unity(u64 n) {
  std::vector<cplx> w(n);
  const long double step = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(n);
  for (u64 k = 0; k < n; ++k) {
    const long double angle = step * static_cast<long double>(k);
    w[k] = cplx(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
  }
  return w;
}

cplx sum_roots(const std::vector<u64>& set, const std::vector<cplx>& w) {
  cplx acc{};
  for (u64 x : set) acc += w[x];
  return acc;
}

}  // namespace

std::string_view to_string(PeriodCase c) {
  switch (c) {
    case PeriodCase::FfOdd:
      return "ff-odd";
    case PeriodCase::FfEvenD0Mod4:
      return "ff-even-d0mod4";
    case PeriodCase::FfEvenD2Mod4:
      return "ff-even-d2mod4";
  }
  return "ff-odd";
}

PeriodCase period_case(const SequenceParams& params) {
  if (!params.ff_even()) return PeriodCase::FfOdd;
  return params.d % 4 == 0 ? PeriodCase::FfEvenD0Mod4 : PeriodCase::FfEvenD2Mod4;
}

OmegaClosedForm omega_closed_form(const SequenceParams& params) {
  OmegaClosedForm out;
  out.kase = period_case(params);
  const mpz_class n(static_cast<unsigned long>(params.N));
  const double root = std::sqrt(static_cast<double>(params.N));
  if (out.kase == PeriodCase::FfEvenD2Mod4) {
    out.product = mpq_class(1 + n, 4);
    out.radicand_sign = -1;
    out.candidates = {cplx(0.5, root / 2), cplx(0.5, -root / 2)};
  } else {
    out.product = mpq_class(1 - n, 4);
    out.radicand_sign = 1;
    out.candidates = {cplx((1 + root) / 2, 0), cplx((1 - root) / 2, 0)};
  }
  out.product.canonicalize();
  return out;
}

GaussPeriods gauss_periods_numeric(const CyclotomicTables& tables, u64 max_n) {
  const auto& params = tables.params();
  if (params.N > max_n) {
    throw std::invalid_argument("N = " + std::to_string(params.N) + " exceeds the numeric limit " +
                                std::to_string(max_n));
  }
  const auto w = roots_of_unity(params.N);
  GaussPeriods out;
  out.etas.reserve(params.d);
  for (u64 i = 0; i < params.d; ++i) {
    out.etas.push_back(sum_roots(tables.cls(i), w));
    (i % 2 == 0 ? out.omega0 : out.omega1) += out.etas.back();
  }
  out.sum_P = sum_roots(tables.P(), w);
  out.sum_Q = sum_roots(tables.Q(), w);
  return out;
}

std::size_t realized_candidate(const OmegaClosedForm& closed, const GaussPeriods& periods) {
  return std::abs(periods.omega0 - closed.candidates[0]) <= std::abs(periods.omega0 - closed.candidates[1])
             ? 0
             : 1;
}

std::string_view to_string(SpectrumClass c) {
  switch (c) {
    case SpectrumClass::R:
      return "R";
    case SpectrumClass::D0star:
      return "D0*";
    case SpectrumClass::D1star:
      return "D1*";
    case SpectrumClass::P:
      return "P";
    case SpectrumClass::Q:
      return "Q";
  }
  return "R";
}

SpectrumClass spectrum_class(const SequenceParams& params, u64 a) {
  switch (region_of(params, a)) {
    case Region::R:
      return SpectrumClass::R;
    case Region::P:
      return SpectrumClass::P;
    case Region::Q:
      return SpectrumClass::Q;
    case Region::Unit:
      break;
  }
  return star_index(params, a) == 0 ? SpectrumClass::D0star : SpectrumClass::D1star;
}

SpectrumValue spectrum_at(u64 a, const SequenceParams& params, const GaussPeriods& periods) {
  SpectrumValue out;
  out.cls = spectrum_class(params, a);
  const mpz_class p(static_cast<unsigned long>(params.p));
  const mpz_class q(static_cast<unsigned long>(params.q));
  switch (out.cls) {
    case SpectrumClass::R:
      out.exact = mpq_class((p + 1) * (q - 1), 2);
      break;
    case SpectrumClass::P:
      out.exact = mpq_class(-(p + 1), 2);
      break;
    case SpectrumClass::Q:
      out.exact = mpq_class(q - 1, 2);
      break;
    case SpectrumClass::D0star:
      out.value = -periods.omega0;
      return out;
    case SpectrumClass::D1star:
      out.value = -periods.omega1;
      return out;
  }
  out.exact->canonicalize();
  out.value = cplx(out.exact->get_d(), 0.0);
  return out;
}

cplx evaluate_at_root(const BinarySequence& seq, u64 a) {
  const u64 n = seq.size();
  const auto w = roots_of_unity(n);
  cplx acc{};
  u64 idx = 0;
  a %= n;
  for (u64 i = 0; i < n; ++i) {
    if (seq[i]) acc += w[idx];
    idx += a;
    if (idx >= n) idx -= n;
  }
  return acc;
}

mpz_class circulant_det_closed(const SequenceParams& params) {
  const auto closed = omega_closed_form(params);
  if (closed.product.get_den() != 1) throw std::logic_error("Gauss period product is not an integer");
  const mpz_class product = closed.product.get_num();

  mpz_class a;
  mpz_class b;
  mpz_class c;
  mpz_ui_pow_ui(a.get_mpz_t(), (params.p + 1) / 2, params.q);
  mpz_ui_pow_ui(b.get_mpz_t(), (params.q - 1) / 2, params.p);
  mpz_pow_ui(c.get_mpz_t(), product.get_mpz_t(), (params.p - 1) * (params.q - 1) / 2);
  return 2 * a * b * c;
}

mpz_class circulant_det_exact(const BinarySequence& seq, u64 max_n) {
  const std::size_t n = seq.size();
  if (n > max_n) {
    throw std::invalid_argument("N = " + std::to_string(n) + " exceeds the determinant oracle limit " +
                                std::to_string(max_n));
  }
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = seq[(i + n - j) % n] ? 1 : 0;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SpectralProfile spectral_profile(const CyclotomicTables& tables) {
  SpectralProfile out;
  out.params = tables.params();
  out.periods = gauss_periods_numeric(tables);
  out.closed = omega_closed_form(out.params);
  out.realized = realized_candidate(out.closed, out.periods);

  const auto& prm = out.params;
  // Representatives: 0, 1 in D0*, x in D1*, p, q.
  const std::array<u64, 5> reps = {0, 1, prm.x, prm.p, prm.q};
  for (std::size_t k = 0; k < reps.size(); ++k) out.spectrum[k] = spectrum_at(reps[k], prm, out.periods);
  out.det_closed = circulant_det_closed(prm);
  return out;
}

}  // namespace seqlab
