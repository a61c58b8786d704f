#include "seqlab/numtheory.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace seqlab {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (u64 r : prime_factors(n)) phi = phi / r * (r - 1);
  return phi;
}

}  // namespace

u64 multiplicative_order(u64 a, u64 n) {
  if (n < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  a %= n;
  if (gcd_u64(a, n) != 1) {
    throw std::invalid_argument("multiplicative_order: " + std::to_string(a) +
                                " is not a unit mod " + std::to_string(n));
  }
  u64 order = euler_phi(n);
  for (u64 r : prime_factors(order)) {
    while (order % r == 0 && pow_mod(a, order / r, n) == 1) order /= r;
  }
  return order;
}

bool is_primitive_root(u64 g, u64 p) {
  if (g % p == 0) return false;
  for (u64 r : prime_factors(p - 1)) {
    if (pow_mod(g, (p - 1) / r, p) == 1) return false;
  }
  return true;
}

PrimePair::PrimePair(u64 p, u64 q) : p_(p), q_(q) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (q % 2 == 0 || !is_prime(q)) throw std::invalid_argument("q must be an odd prime");
  if (p >= q) throw std::invalid_argument("p must be less than q");
  if (q > (u64{1} << 31)) throw std::invalid_argument("q is outside the supported range");
}

u64 common_primitive_root(const PrimePair& pair) {
  const u64 n = pair.modulus();
  for (u64 g = 2; g < n; ++g) {
    if (is_primitive_root(g % pair.p(), pair.p()) && is_primitive_root(g % pair.q(), pair.q())) {
      return g;
    }
  }
  throw std::logic_error("common_primitive_root: none found");  // unreachable for prime p, q
}

u64 whiteman_x(const PrimePair& pair, u64 g) {
  const u64 p = pair.p();
  const u64 q = pair.q();
  // x = 1 + q*k with q*k = g - 1 (mod p).
  const u64 q_inv = pow_mod(q % p, p - 2, p);
  const u64 k = mul_mod((g + p - 1) % p, q_inv, p);
  return (1 + q * k) % pair.modulus();
}

int legendre_symbol(i64 a, u64 p) {
  const i64 ps = static_cast<i64>(p);
  const u64 r = static_cast<u64>(((a % ps) + ps) % ps);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

mpz_class mersenne(u64 n) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, n);
  return m - 1;
}

MersenneGcdSplit mersenne_gcd_split(const PrimePair& pair) {
  const mpz_class full = mersenne(pair.modulus());
  const mpz_class mp = mersenne(pair.p());
  const mpz_class mq = mersenne(pair.q());
  MersenneGcdSplit out;
  out.gp = gcd(mp, mpz_class(full / mp));
  out.gq = gcd(mq, mpz_class(full / mq));
  return out;
}

}  // namespace seqlab
