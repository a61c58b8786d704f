#include "seqlab/adic.hpp"

#include <stdexcept>

namespace seqlab {

mpz_class s_of_2(const BinarySequence& seq) {
  mpz_class out;
  const auto& words = seq.words();
  if (!words.empty()) {
    mpz_import(out.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  }
  return out;
}

u64 floor_log2(const mpz_class& v) {
  if (v <= 0) throw std::domain_error("floor_log2: argument must be positive");
  return mpz_sizeinbase(v.get_mpz_t(), 2) - 1;
}

AdicReport two_adic_complexity(const BinarySequence& seq) {
  if (seq.empty()) throw std::invalid_argument("two_adic_complexity: empty sequence");
  AdicReport r;
  r.N = seq.size();
  r.S2 = s_of_2(seq);
  r.modulus = mersenne(r.N);
  r.g = gcd(r.S2, r.modulus);  // gcd(0, m) = m for the all-zero input
  r.degenerate = (r.S2 == 0);
  r.phi2 = r.degenerate ? 0 : floor_log2(r.modulus / r.g);
  r.maximal = !r.degenerate && r.phi2 == r.N - 1;

  if (const auto& prm = seq.params()) {
    const auto v = bound_verdict(*prm, r);
    r.bound = v.bound;
    r.bound_holds = v.holds;
    const mpz_class product = mersenne(prm->p) * mersenne(prm->q);
    r.gcd_divides_mersenne_product = mpz_divisible_p(product.get_mpz_t(), r.g.get_mpz_t()) != 0;
  }
  return r;
}

BoundVerdict bound_verdict(const SequenceParams& params, const AdicReport& report) {
  BoundVerdict v;
  const i64 p = static_cast<i64>(params.p);
  const i64 q = static_cast<i64>(params.q);
  v.bound = p * q - p - q - 1;
  v.holds = static_cast<i64>(report.phi2) >= v.bound;
  v.twin_prime = params.twin();
  v.twin_prime_maximal = v.twin_prime && report.maximal;
  return v;
}

GcdDiagnostics gcd_structure(const SequenceParams& params, const AdicReport& report) {
  const mpz_class mp = mersenne(params.p);
  const mpz_class mq = mersenne(params.q);
  GcdDiagnostics out;
  out.g_p = gcd(report.g, mp);
  out.g_q = gcd(report.g, mq);
  out.divides_product = (out.g_p * out.g_q == report.g);
  const mpz_class cofactor = report.modulus / (mp * mq);
  out.cofactor_gcd = gcd(report.g, cofactor);
  out.mersenne_correction = gcd(mp, mpz_class(static_cast<unsigned long>(params.q)));
  out.cofactor_within_correction =
      mpz_divisible_p(out.mersenne_correction.get_mpz_t(), out.cofactor_gcd.get_mpz_t()) != 0;
  return out;
}

}  // namespace seqlab
