#include "seqlab/cyclotomy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace seqlab {

SequenceParams build_params(const PrimePair& pair) {
  SequenceParams s;
  s.p = pair.p();
  s.q = pair.q();
  s.N = pair.modulus();
  s.d = gcd_u64(s.p - 1, s.q - 1);
  s.f = (s.p - 1) / s.d;
  s.fprime = (s.q - 1) / s.d;
  s.L = (s.p - 1) * (s.q - 1) / s.d;
  s.g = common_primitive_root(pair);
  s.x = whiteman_x(pair, s.g);
  return s;
}

Region region_of(const SequenceParams& params, u64 r) {
  r %= params.N;
  if (r == 0) return Region::R;
  if (r % params.p == 0) return Region::P;
  if (r % params.q == 0) return Region::Q;
  return Region::Unit;
}

int star_index(const SequenceParams& params, u64 unit) {
  const i64 u = static_cast<i64>(unit % params.N);
  const int jac = legendre_symbol(u, params.p) * legendre_symbol(u, params.q);
  if (jac == 0) throw std::invalid_argument("star_index: " + std::to_string(u) + " is not a unit");
  return jac == 1 ? 0 : 1;
}

bool in_c1(const SequenceParams& params, u64 r) {
  switch (region_of(params, r)) {
    case Region::P:
      return true;
    case Region::Unit:
      return star_index(params, r) == 1;
    default:
      return false;
  }
}

CyclotomicTables::CyclotomicTables(const SequenceParams& params) : params_(params) {
  const u64 n = params.N;
  if (n > kMaterializeLimit) {
    throw std::invalid_argument("N = " + std::to_string(n) + " exceeds the materialization limit " +
                                std::to_string(kMaterializeLimit));
  }
  labels_.assign(n, kLabelR);
  for (u64 k = 1; k < params.q; ++k) {
    P_.push_back(k * params.p);
    labels_[k * params.p] = kLabelP;
  }
  for (u64 k = 1; k < params.p; ++k) {
    Q_.push_back(k * params.q);
    labels_[k * params.q] = kLabelQ;
  }

  classes_.resize(params.d);
  u64 xi = 1;
  for (u64 i = 0; i < params.d; ++i) {
    auto& cls = classes_[i];
    cls.reserve(params.L);
    u64 e = xi;
    for (u64 t = 0; t < params.L; ++t) {
      if (labels_[e] != kLabelR) {
        throw std::logic_error("cyclotomic classes overlap at residue " + std::to_string(e));
      }
      labels_[e] = static_cast<std::int32_t>(i);
      cls.push_back(e);
      e = mul_mod(e, params.g, n);
    }
    std::sort(cls.begin(), cls.end());
    xi = mul_mod(xi, params.x, n);
  }
  // d*L = (p-1)(q-1) disjoint units fill Z_N^* exactly, leaving only 0 as R.
  for (u64 r = 1; r < n; ++r) {
    if (labels_[r] == kLabelR) {
      throw std::logic_error("unit " + std::to_string(r) + " missing from every class");
    }
  }
}

Region CyclotomicTables::region(u64 r) const {
  switch (label(r)) {
    case kLabelR:
      return Region::R;
    case kLabelP:
      return Region::P;
    case kLabelQ:
      return Region::Q;
    default:
      return Region::Unit;
  }
}

std::vector<u64> CyclotomicTables::star_union(u64 parity) const {
  std::vector<u64> out;
  out.reserve(params_.L * params_.d / 2);
  for (u64 i = parity; i < params_.d; i += 2) out.insert(out.end(), classes_[i].begin(), classes_[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> CyclotomicTables::c0() const {
  std::vector<u64> out;
  for (u64 r = 0; r < params_.N; ++r) {
    const auto l = labels_[r];
    if (l == kLabelR || l == kLabelQ || (l >= 0 && l % 2 == 0)) out.push_back(r);
  }
  return out;
}

std::vector<u64> CyclotomicTables::c1() const {
  std::vector<u64> out;
  for (u64 r = 0; r < params_.N; ++r) {
    const auto l = labels_[r];
    if (l == kLabelP || (l >= 0 && l % 2 == 1)) out.push_back(r);
  }
  return out;
}

CyclotomicTables build_tables(const SequenceParams& params) { return CyclotomicTables(params); }

std::vector<u64> cyclotomic_matrix(const CyclotomicTables& tables) {
  const u64 d = tables.order();
  std::vector<u64> m(d * d, 0);
  for (u64 i = 0; i < d; ++i) {
    for (u64 y : tables.cls(i)) {
      const auto j = tables.label(y + 1);
      if (j >= 0) ++m[i * d + static_cast<u64>(j)];
    }
  }
  return m;
}

u64 cyclotomic_number(u64 i, u64 j, const CyclotomicTables& tables) {
  const u64 d = tables.order();
  if (i >= d || j >= d) throw std::out_of_range("cyclotomic_number: class index out of range");
  u64 count = 0;
  for (u64 y : tables.cls(i)) {
    if (tables.label(y + 1) == static_cast<std::int32_t>(j)) ++count;
  }
  return count;
}

u64 shifted_intersection(u64 i, u64 j, u64 u, const CyclotomicTables& tables) {
  const u64 d = tables.order();
  if (i >= d || j >= d) throw std::out_of_range("shifted_intersection: class index out of range");
  const Region reg = tables.region(u);
  if (reg != Region::P && reg != Region::Q) {
    throw std::invalid_argument("shifted_intersection: shift " + std::to_string(u) + " is not in P or Q");
  }
  u64 count = 0;
  for (u64 y : tables.cls(j)) {
    if (tables.label(y + u) == static_cast<std::int32_t>(i)) ++count;
  }
  return count;
}

}  // namespace seqlab
