#include "seqlab/attack.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "seqlab/adic.hpp"

namespace seqlab {

u64 RationalApprox::size_measure() const {
  const mpz_class m = abs(numerator);
  const mpz_class& big = m > denominator ? m : denominator;
  return big == 0 ? 0 : floor_log2(big);
}

BinarySequence periodic_prefix(const BinarySequence& seq, u64 k) {
  if (seq.empty()) throw std::invalid_argument("periodic_prefix: empty sequence");
  BinarySequence out(k, SequenceSource::External);
  const u64 n = seq.size();
  for (u64 i = 0, j = 0; i < k; ++i) {
    out.set(i, seq[j]);
    if (++j == n) j = 0;
  }
  return out;
}

namespace {

struct Vec2 {
  mpz_class m;
  mpz_class n;
};

mpz_class dot(const Vec2& a, const Vec2& b) { return a.m * b.m + a.n * b.n; }

mpz_class sup_norm(const Vec2& v) {
  const mpz_class am = abs(v.m);
  const mpz_class an = abs(v.n);
  return am > an ? am : an;
}

// Lagrange-Gauss reduction; on return |u| <= |v| and u is a shortest vector.
void reduce(Vec2& u, Vec2& v) {
  if (dot(u, u) > dot(v, v)) std::swap(u, v);
  mpz_class uu = dot(u, u);
  while (true) {
    // mu = round(<u,v> / <u,u>)
    mpz_class mu = 2 * dot(u, v) + uu;
    mpz_fdiv_q(mu.get_mpz_t(), mu.get_mpz_t(), mpz_class(2 * uu).get_mpz_t());
    v.m -= mu * u.m;
    v.n -= mu * u.n;
    const mpz_class vv = dot(v, v);
    if (vv >= uu) return;
    std::swap(u, v);
    uu = vv;
  }
}

}  // namespace

RationalApprox raa_approximate(const BinarySequence& prefix) {
  const u64 k = prefix.size();
  if (k < 2) throw std::invalid_argument("raa_approximate: prefix needs at least 2 bits");
  const mpz_class alpha = s_of_2(prefix);
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), 2, k);

  Vec2 u{modulus, 0};
  Vec2 v{alpha, 1};
  reduce(u, v);

  // The odd-n vectors form a coset of an index-2 sublattice; search the
  // short combinations of the reduced basis for the smallest one.
  std::optional<Vec2> best;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      Vec2 w{a * u.m + b * v.m, a * u.n + b * v.n};
      if (mpz_odd_p(w.n.get_mpz_t()) == 0) continue;
      if (!best) {
        best = w;
        continue;
      }
      const mpz_class sw = sup_norm(w);
      const mpz_class sb = sup_norm(*best);
      if (sw < sb || (sw == sb && dot(w, w) < dot(*best, *best))) best = w;
    }
  }
  if (!best) throw std::logic_error("raa_approximate: no odd denominator found");

  RationalApprox out;
  out.prefix_len = k;
  out.numerator = best->m;
  out.denominator = best->n;
  if (out.denominator < 0) {
    out.numerator = -out.numerator;
    out.denominator = -out.denominator;
  }
  const mpz_class common = gcd(out.numerator, out.denominator);
  out.numerator /= common;
  out.denominator /= common;
  return out;
}

bool matches_prefix(const RationalApprox& approx, const BinarySequence& prefix) {
  if (mpz_even_p(approx.denominator.get_mpz_t()) != 0) return false;
  const mpz_class alpha = s_of_2(prefix);
  const mpz_class diff = approx.numerator - approx.denominator * alpha;
  return mpz_divisible_2exp_p(diff.get_mpz_t(), prefix.size()) != 0;
}

RationalApprox periodic_rational(const BinarySequence& seq) {
  RationalApprox out;
  out.prefix_len = seq.size();
  const mpz_class s2 = s_of_2(seq);
  if (s2 == 0) {
    out.numerator = 0;
    out.denominator = 1;
    return out;
  }
  const mpz_class modulus = mersenne(seq.size());
  const mpz_class g = gcd(s2, modulus);
  out.numerator = -(s2 / g);
  out.denominator = modulus / g;
  return out;
}

namespace {

// Growable GF(2) polynomial / bit string, packed 64 per word.
class PackedBits {
 public:
  explicit PackedBits(std::size_t nbits) : w_(nbits / 64 + 2, 0) {}

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  // 64 bits starting at bit position pos.
  std::uint64_t window(std::size_t pos) const {
    const std::size_t word = pos >> 6;
    const unsigned shift = pos & 63;
    const std::uint64_t lo = word < w_.size() ? w_[word] : 0;
    if (shift == 0) return lo;
    const std::uint64_t hi = word + 1 < w_.size() ? w_[word + 1] : 0;
    return (lo >> shift) | (hi << (64 - shift));
  }

  // this ^= other << shift, restricted to bits [0, limit).
  void xor_shifted(const PackedBits& other, std::size_t shift, std::size_t limit) {
    const std::size_t wshift = shift >> 6;
    const unsigned bshift = shift & 63;
    const std::size_t last = std::min(w_.size(), limit / 64 + 1);
    for (std::size_t i = wshift; i < last; ++i) {
      const std::size_t src = i - wshift;
      std::uint64_t v = other.w_[src] << bshift;
      if (bshift != 0 && src > 0) v |= other.w_[src - 1] >> (64 - bshift);
      w_[i] ^= v;
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::vector<std::uint64_t> w_;
};

}  // namespace

u64 berlekamp_massey_finite(const BinarySequence& bits) {
  const std::size_t n = bits.size();
  if (n == 0) return 0;
  // rev[k] = bits[n-1-k], so the window s_i, s_{i-1}, ..., s_{i-L} is
  // the contiguous run rev[n-1-i .. n-1-i+L].
  PackedBits rev(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i]) rev.flip(n - 1 - i);
  }
  PackedBits c(n + 1);
  PackedBits b(n + 1);
  c.flip(0);
  b.flip(0);
  std::size_t len = 0;
  std::size_t m = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = n - 1 - i;
    unsigned parity = 0;
    for (std::size_t j = 0; j <= len; j += 64) {
      std::uint64_t word = rev.window(base + j) & c.words()[j >> 6];
      const std::size_t remaining = len + 1 - j;
      if (remaining < 64) word &= (std::uint64_t{1} << remaining) - 1;
      parity ^= static_cast<unsigned>(std::popcount(word)) & 1u;
    }
    if (parity == 0) {
      ++m;
    } else if (2 * len <= i) {
      PackedBits t = c;
      c.xor_shifted(b, m, n + 1);
      len = i + 1 - len;
      b = std::move(t);
      m = 1;
    } else {
      c.xor_shifted(b, m, n + 1);
      ++m;
    }
  }
  return len;
}

u64 berlekamp_massey(const BinarySequence& seq) {
  return berlekamp_massey_finite(periodic_prefix(seq, 2 * seq.size()));
}

AttackReport attack_report(const BinarySequence& seq, u64 lc_limit) {
  const AdicReport adic = two_adic_complexity(seq);
  AttackReport r;
  r.N = seq.size();
  r.phi2 = adic.phi2;
  r.degenerate = adic.degenerate;
  r.bound = adic.bound;
  r.passes = !adic.degenerate && 2 * adic.phi2 >= r.N;
  if (r.N <= lc_limit) {
    r.linear_complexity = berlekamp_massey(seq);
    r.linear_passes = 2 * *r.linear_complexity >= r.N;
  }

  r.target = periodic_rational(seq);
  const u64 k_max = 2 * r.N + 4;
  r.raa_recovered = raa_approximate(periodic_prefix(seq, k_max)) == r.target;
  if (r.raa_recovered) {
    u64 k = k_max;
    while (k > 2 && raa_approximate(periodic_prefix(seq, k - 1)) == r.target) --k;
    r.raa_min_prefix = k;
  }
  return r;
}

}  // namespace seqlab
