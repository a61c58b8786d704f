#pragma once

#include <cstdint>
#include <vector>

#include "seqlab/numtheory.hpp"

namespace seqlab {

// Parameter tuple of Whiteman cyclotomy of order d over Z_N, N = pq.
struct SequenceParams {
  u64 p = 0;
  u64 q = 0;
  u64 N = 0;
  u64 d = 0;       // gcd(p-1, q-1)
  u64 f = 0;       // (p-1)/d
  u64 fprime = 0;  // (q-1)/d
  u64 g = 0;       // common primitive root
  u64 x = 0;       // x = g (mod p), x = 1 (mod q)
  u64 L = 0;       // (p-1)(q-1)/d, order of g mod N

  PrimePair pair() const { return PrimePair(p, q); }
  bool ff_even() const { return (f * fprime) % 2 == 0; }
  bool twin() const { return q == p + 2; }
};

SequenceParams build_params(const PrimePair& pair);

// Partition of Z_N into R = {0}, P (nonzero multiples of p),
// Q (nonzero multiples of q) and the units.
enum class Region : std::uint8_t { R, P, Q, Unit };

Region region_of(const SequenceParams& params, u64 r);

// 0 for D0* (even classes), 1 for D1* (odd classes); requires a unit.
// Uses the product of Legendre symbols, so it works at any N.
int star_index(const SequenceParams& params, u64 unit);

// True iff r mod N lies in the support set C1 = D1* u P.
bool in_c1(const SequenceParams& params, u64 r);

inline constexpr u64 kMaterializeLimit = 1'000'000;

// Materialized classes D_0..D_{d-1} and the residue -> label index.
class CyclotomicTables {
 public:
  static constexpr std::int32_t kLabelR = -1;
  static constexpr std::int32_t kLabelP = -2;
  static constexpr std::int32_t kLabelQ = -3;

  // Enumerates D_i = { g^t x^i } by direct powering. Throws
  // std::invalid_argument above kMaterializeLimit and std::logic_error if
  // the enumerated classes do not partition Z_N^*.
  explicit CyclotomicTables(const SequenceParams& params);

  const SequenceParams& params() const { return params_; }
  u64 order() const { return params_.d; }

  const std::vector<u64>& cls(u64 i) const { return classes_.at(i); }
  const std::vector<u64>& P() const { return P_; }
  const std::vector<u64>& Q() const { return Q_; }

  // Class index in [0, d) for units, kLabelR / kLabelP / kLabelQ otherwise.
  std::int32_t label(u64 r) const { return labels_[r % params_.N]; }
  Region region(u64 r) const;

  std::vector<u64> d0star() const { return star_union(0); }
  std::vector<u64> d1star() const { return star_union(1); }
  std::vector<u64> c0() const;
  std::vector<u64> c1() const;

 private:
  std::vector<u64> star_union(u64 parity) const;

  SequenceParams params_;
  std::vector<std::vector<u64>> classes_;
  std::vector<u64> P_;
  std::vector<u64> Q_;
  std::vector<std::int32_t> labels_;
};

CyclotomicTables build_tables(const SequenceParams& params);

// Matrix of cyclotomic numbers (i,j) = |(D_i + 1) n D_j|, row-major d x d.
std::vector<u64> cyclotomic_matrix(const CyclotomicTables& tables);

u64 cyclotomic_number(u64 i, u64 j, const CyclotomicTables& tables);

// |D_i n (D_j + u)| for u in P u Q; throws std::invalid_argument otherwise.
u64 shifted_intersection(u64 i, u64 j, u64 u, const CyclotomicTables& tables);

}  // namespace seqlab
