#include "seqlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "seqlab/adic.hpp"
#include "seqlab/attack.hpp"
#include "seqlab/sequence.hpp"
#include "seqlab/serialize.hpp"
#include "seqlab/spectral.hpp"

namespace seqlab {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
  }
  return "SKIP";
}

namespace {

// Lazily built state shared by the checks of one pair.
class Context {
 public:
  Context(const PrimePair& pair, const VerifyOptions& options)
      : options_(options), params_(build_params(pair)) {}

  const VerifyOptions& options() const { return options_; }
  const SequenceParams& params() const { return params_; }
  bool materializable() const { return params_.N <= kMaterializeLimit; }

  const CyclotomicTables& tables() {
    if (!tables_) tables_.emplace(params_);
    return *tables_;
  }
  const BinarySequence& sequence() {
    if (!sequence_) sequence_ = generate_via_legendre(params_);
    return *sequence_;
  }
  const GaussPeriods& periods() {
    if (!periods_) periods_ = gauss_periods_numeric(tables());
    return *periods_;
  }
  const AdicReport& report() {
    if (!report_) report_ = two_adic_complexity(sequence());
    return *report_;
  }

 private:
  const VerifyOptions& options_;
  SequenceParams params_;
  std::optional<CyclotomicTables> tables_;
  std::optional<BinarySequence> sequence_;
  std::optional<GaussPeriods> periods_;
  std::optional<AdicReport> report_;
};

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::Skip, std::move(detail)}; }
Outcome verdict(bool ok, std::string detail) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)}; }

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::optional<Outcome> needs_tables(Context& ctx) {
  if (!ctx.materializable()) return skip(cat("N = ", ctx.params().N, " above materialization limit"));
  return std::nullopt;
}

std::optional<Outcome> needs_exhaustive(Context& ctx) {
  if (ctx.params().N > ctx.options().exhaustive_max_n) {
    return skip(cat("N = ", ctx.params().N, " above exhaustive limit ", ctx.options().exhaustive_max_n));
  }
  return std::nullopt;
}

std::optional<Outcome> needs_numeric(Context& ctx) {
  if (ctx.params().N > kNumericLimit) return skip(cat("N = ", ctx.params().N, " above numeric limit"));
  return std::nullopt;
}

Outcome check_partition(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const auto& t = ctx.tables();
  const auto& prm = ctx.params();
  for (u64 i = 0; i < prm.d; ++i) {
    if (t.cls(i).size() != prm.L) return fail(cat("|D_", i, "| = ", t.cls(i).size(), " != L = ", prm.L));
  }
  if (t.P().size() != prm.q - 1 || t.Q().size() != prm.p - 1) return fail("|P| or |Q| wrong");
  const auto c0 = t.c0();
  const auto c1 = t.c1();
  if (c0.size() + c1.size() != prm.N) return fail("C0 and C1 do not cover Z_N");
  const u64 expect_c1 = (prm.p - 1) * (prm.q - 1) / 2 + (prm.q - 1);
  if (c1.size() != expect_c1) return fail(cat("|C1| = ", c1.size(), " expected ", expect_c1));
  for (u64 r = 1; r < prm.N; ++r) {
    const auto l = t.label(r);
    if (l < 0) continue;
    if (star_index(prm, r) != l % 2) return fail(cat("Legendre parity disagrees with class at ", r));
  }
  return pass(cat("d = ", prm.d, ", |D_i| = ", prm.L, ", |C1| = ", expect_c1));
}

Outcome check_cyclo_reflection(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const u64 d = ctx.params().d;
  const auto m = cyclotomic_matrix(ctx.tables());
  for (u64 i = 0; i < d; ++i) {
    for (u64 j = 0; j < d; ++j) {
      if (m[i * d + j] != m[((d - i) % d) * d + (j + d - i) % d]) return fail(cat("(", i, ",", j, ")"));
    }
  }
  return pass(cat(d * d, " cyclotomic numbers"));
}

Outcome check_cyclo_swap(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const u64 d = ctx.params().d;
  const bool even = ctx.params().ff_even();
  const u64 h = even ? d / 2 : 0;
  const auto m = cyclotomic_matrix(ctx.tables());
  for (u64 i = 0; i < d; ++i) {
    for (u64 j = 0; j < d; ++j) {
      if (m[i * d + j] != m[((j + h) % d) * d + (i + h) % d]) return fail(cat("(", i, ",", j, ")"));
    }
  }
  return pass(even ? "ff' even: (i,j) = (j+d/2, i+d/2)" : "ff' odd: (i,j) = (j,i)");
}

Outcome check_cyclo_row_sum(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const auto& prm = ctx.params();
  const u64 d = prm.d;
  const auto m = cyclotomic_matrix(ctx.tables());
  const u64 base = ((prm.p - 2) * (prm.q - 2) - 1) / d;
  const u64 special = prm.ff_even() ? d / 2 : 0;
  for (u64 i = 0; i < d; ++i) {
    u64 sum = 0;
    for (u64 j = 0; j < d; ++j) sum += m[i * d + j];
    const u64 expect = base + (i == special ? 1 : 0);
    if (sum != expect) return fail(cat("row ", i, ": ", sum, " != ", expect));
  }
  return pass(cat("rows sum to ", base, " (+1 at i = ", special, ")"));
}

// a*B as a sorted vector.
std::vector<u64> scaled(u64 a, const std::vector<u64>& set, u64 n) {
  std::vector<u64> out;
  out.reserve(set.size());
  for (u64 b : set) out.push_back(mul_mod(a, b, n));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome check_mult_units(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  if (auto s = needs_exhaustive(ctx)) return *s;
  const auto& t = ctx.tables();
  const auto& prm = ctx.params();
  const u64 n = prm.N;
  const u64 d = prm.d;
  for (u64 a = 1; a < n; ++a) {
    const auto la = t.label(a);
    if (la < 0) continue;
    // b -> ab is injective on units and |D_j| = |D_{i+j}|, so labels suffice.
    for (u64 b = 1; b < n; ++b) {
      const auto lb = t.label(b);
      const auto lab = t.label(a * b % n);
      if (lb >= 0) {
        if (lab != static_cast<std::int32_t>((la + lb) % d)) return fail(cat("a = ", a, ", b = ", b));
      } else if (lab != lb) {
        return fail(cat("a = ", a, " does not fix the region of ", b));
      }
    }
  }
  return pass("aD_j = D_(i+j), aP = P, aQ = Q for every unit a");
}

Outcome check_mult_multiples(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  if (auto s = needs_exhaustive(ctx)) return *s;
  const auto& t = ctx.tables();
  const auto& prm = ctx.params();
  const u64 n = prm.N;
  auto covers = [&](u64 a, const std::vector<u64>& set, const std::vector<u64>& target, u64 times) {
    std::vector<u64> count(n, 0);
    for (u64 b : set) ++count[mul_mod(a, b, n)];
    for (u64 r : target) {
      if (count[r] != times) return false;
    }
    return set.size() == target.size() * times;
  };
  const auto d0 = t.d0star();
  const auto d1 = t.d1star();
  for (const auto& [mults, target, other] :
       {std::tuple{&t.P(), &t.P(), prm.p}, std::tuple{&t.Q(), &t.Q(), prm.q}}) {
    for (u64 a : *mults) {
      for (u64 i = 0; i < prm.d; ++i) {
        if (!covers(a, t.cls(i), *target, (other - 1) / prm.d)) return fail(cat("a = ", a, ", D_", i));
      }
      if (!covers(a, d0, *target, (other - 1) / 2) || !covers(a, d1, *target, (other - 1) / 2)) {
        return fail(cat("a = ", a, " over D*"));
      }
    }
  }
  return pass(cat("a*D_i covers P ", (prm.p - 1) / prm.d, "x and Q ", (prm.q - 1) / prm.d,
                  "x; a*D_i* covers P ", (prm.p - 1) / 2, "x and Q ", (prm.q - 1) / 2, "x"));
}

Outcome check_mult_cross(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const auto& t = ctx.tables();
  const u64 n = ctx.params().N;
  const std::vector<u64> zero_set{0};
  for (u64 a : t.P()) {
    if (scaled(a, t.P(), n) != t.P()) return fail(cat("aP != P for a = ", a));
    for (u64 b : t.Q()) {
      if (mul_mod(a, b, n) != 0) return fail(cat("aQ != R for a = ", a));
    }
  }
  for (u64 a : t.Q()) {
    if (scaled(a, t.Q(), n) != t.Q()) return fail(cat("aQ != Q for a = ", a));
  }
  return pass("aP = P, aQ = R for a in P; aQ = Q, aP = R for a in Q");
}

Outcome check_mult_star(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  if (auto s = needs_exhaustive(ctx)) return *s;
  const auto& t = ctx.tables();
  const u64 n = ctx.params().N;
  for (u64 a = 1; a < n; ++a) {
    const auto la = t.label(a);
    if (la < 0) continue;
    for (u64 b = 1; b < n; ++b) {
      const auto lb = t.label(b);
      if (lb < 0) continue;
      if (t.label(a * b % n) % 2 != (la + lb) % 2) return fail(cat("a = ", a, ", b = ", b));
    }
  }
  return pass("aD_j* = D_(i+j mod 2)*, aP = P, aQ = Q");
}

Outcome check_minus_one(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const auto& prm = ctx.params();
  const auto l = ctx.tables().label(prm.N - 1);
  const std::int32_t expect = prm.ff_even() ? static_cast<std::int32_t>(prm.d / 2) : 0;
  return verdict(l == expect, cat("-1 in D_", l, ", expected D_", expect));
}

Outcome check_shifted_intersection(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  if (auto s = needs_exhaustive(ctx)) return *s;
  const auto& t = ctx.tables();
  const auto& prm = ctx.params();
  const u64 d = prm.d;
  const u64 off = (prm.p - 1) * (prm.q - 1) / (d * d);
  const u64 same_p = (prm.p - 1) * (prm.q - 1 - d) / (d * d);
  const u64 same_q = (prm.p - 1 - d) * (prm.q - 1) / (d * d);
  std::vector<u64> shifts = t.P();
  shifts.insert(shifts.end(), t.Q().begin(), t.Q().end());
  for (u64 u : shifts) {
    const bool in_p = u % prm.p == 0;
    // counts[i*d + j] = |D_i n (D_j + u)|
    std::vector<u64> counts(d * d, 0);
    for (u64 j = 0; j < d; ++j) {
      for (u64 y : t.cls(j)) {
        const auto i = t.label(y + u);
        if (i >= 0) ++counts[static_cast<u64>(i) * d + j];
      }
    }
    for (u64 i = 0; i < d; ++i) {
      for (u64 j = 0; j < d; ++j) {
        const u64 expect = i != j ? off : (in_p ? same_p : same_q);
        if (counts[i * d + j] != expect) return fail(cat("u = ", u, ", (i,j) = (", i, ",", j, ")"));
      }
    }
  }
  return pass(cat(off, " / ", same_p, " / ", same_q));
}

Outcome check_char_sums(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  if (auto s = needs_numeric(ctx)) return *s;
  const auto& g = ctx.periods();
  const double tol = 1e-9 * static_cast<double>(ctx.params().N);
  cplx eta_sum{};
  for (const auto& e : g.etas) eta_sum += e;
  const bool ok = std::abs(g.sum_P + 1.0) <= tol && std::abs(g.sum_Q + 1.0) <= tol && std::abs(eta_sum - 1.0) <= tol;
  return verdict(ok, cat("sum_P = ", g.sum_P.real(), ", sum_Q = ", g.sum_Q.real(), ", sum eta = ", eta_sum.real()));
}

Outcome check_gauss_product(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  if (auto s = needs_numeric(ctx)) return *s;
  const auto closed = omega_closed_form(ctx.params());
  const auto& g = ctx.periods();
  const cplx product = g.omega0 * g.omega1;
  const double exact = closed.product.get_d();
  const double err = std::abs(product - exact);
  const double tol = ctx.options().tolerance;
  const bool sum_ok = std::abs(g.omega0 + g.omega1 - 1.0) <= tol;
  const auto which = realized_candidate(closed, g);
  const bool cand_ok = std::abs(g.omega0 - closed.candidates[which]) <= tol;
  return verdict(err <= tol && sum_ok && cand_ok,
                 cat("[", to_string(closed.kase), "] Omega0*Omega1 = ", rational_string(closed.product), ", |err| = ",
                     err, ", Omega0 = (1 ", which == 0 ? "+" : "-", " sqrt(", closed.radicand_sign > 0 ? "" : "-",
                     "pq))/2"));
}

Outcome check_gauss_squares(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  if (auto s = needs_numeric(ctx)) return *s;
  const auto& prm = ctx.params();
  const auto& g = ctx.periods();
  const double pq = static_cast<double>(prm.N);
  const double expect = period_case(prm) == PeriodCase::FfEvenD2Mod4 ? 1 - (pq + 1) / 2 : 1 + (pq - 1) / 2;
  const cplx squares = g.omega0 * g.omega0 + g.omega1 * g.omega1;
  const double err = std::abs(squares - expect);
  return verdict(err <= ctx.options().tolerance, cat("Omega0^2 + Omega1^2 = ", expect, ", |err| = ", err));
}

Outcome check_spectrum(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const auto& prm = ctx.params();
  if (prm.N > ctx.options().spectrum_max_n) return skip(cat("N = ", prm.N, " above spectrum limit"));
  const auto& g = ctx.periods();
  const auto& seq = ctx.sequence();
  const double tol = ctx.options().spectrum_tolerance * static_cast<double>(prm.N);
  double worst = 0;
  for (u64 a = 0; a < prm.N; ++a) {
    const double err = std::abs(evaluate_at_root(seq, a) - spectrum_at(a, prm, g).value);
    worst = std::max(worst, err);
    if (err > tol) return fail(cat("a = ", a, ", |err| = ", err));
  }
  return pass(cat("max |err| = ", worst, " over ", prm.N, " residues"));
}

Outcome check_generators(Context& ctx) {
  if (auto s = needs_tables(ctx)) return *s;
  const auto& prm = ctx.params();
  const auto a = generate_modified_jacobi(ctx.tables());
  const auto& b = ctx.sequence();
  const u64 weight = (prm.p - 1) * (prm.q - 1) / 2 + (prm.q - 1);
  return verdict(a == b && b.weight() == weight && !b[0], cat("weight ", b.weight()));
}

Outcome check_det(Context& ctx) {
  const auto& prm = ctx.params();
  if (prm.N > ctx.options().oracle_max_n) return skip(cat("N = ", prm.N, " above oracle limit ", ctx.options().oracle_max_n));
  const mpz_class exact = circulant_det_exact(ctx.sequence(), ctx.options().oracle_max_n);
  const mpz_class closed = circulant_det_closed(prm);
  return verdict(exact == closed, cat(exact.get_str(), " = ", closed.get_str()));
}

Outcome check_gcd_det(Context& ctx) {
  const auto& prm = ctx.params();
  if (prm.N > ctx.options().oracle_max_n) return skip(cat("N = ", prm.N, " above oracle limit"));
  const mpz_class det = circulant_det_exact(ctx.sequence(), ctx.options().oracle_max_n);
  if (det == 0) return skip("singular circulant");
  const auto& r = ctx.report();
  const mpz_class gd = gcd(det, r.modulus);
  return verdict(mpz_divisible_p(gd.get_mpz_t(), r.g.get_mpz_t()) != 0,
                 cat("gcd(S(2), M) = ", r.g.get_str(), " | gcd(det, M) = ", gd.get_str()));
}

Outcome check_mersenne_gcd(Context& ctx) {
  const auto& prm = ctx.params();
  const auto split = mersenne_gcd_split(prm.pair());
  const mpz_class p(static_cast<unsigned long>(prm.p));
  const mpz_class q(static_cast<unsigned long>(prm.q));
  const bool ok = split.gp == gcd(mersenne(prm.p), q) && split.gq == gcd(mersenne(prm.q), p) && split.gq == 1;
  return verdict(ok, cat("gp = ", split.gp.get_str(), ", gq = ", split.gq.get_str()));
}

Outcome check_gcd_structure(Context& ctx) {
  const auto diag = gcd_structure(ctx.params(), ctx.report());
  return verdict(diag.ok(), cat("g = ", ctx.report().g.get_str(), " = ", diag.g_p.get_str(), " * ", diag.g_q.get_str(),
                                ", cofactor gcd ", diag.cofactor_gcd.get_str()));
}

Outcome check_bound(Context& ctx) {
  const auto v = bound_verdict(ctx.params(), ctx.report());
  return verdict(v.holds, cat("phi2 = ", ctx.report().phi2, " >= ", v.bound));
}

Outcome check_twin_maximal(Context& ctx) {
  if (!ctx.params().twin()) return skip("q != p + 2");
  const auto& r = ctx.report();
  return verdict(r.g == 1 && r.maximal, cat("gcd = ", r.g.get_str(), ", phi2 = ", r.phi2, " of ", r.N - 1));
}

Outcome check_raa(Context& ctx) {
  const auto& prm = ctx.params();
  if (prm.N > ctx.options().raa_max_n) return skip(cat("N = ", prm.N, " above RAA limit"));
  const auto& seq = ctx.sequence();
  const auto prefix = periodic_prefix(seq, 2 * prm.N + 4);
  const auto approx = raa_approximate(prefix);
  const auto& r = ctx.report();
  const mpz_class expect_den = r.modulus / r.g;
  const bool ok = approx.denominator == expect_den && matches_prefix(approx, prefix) &&
                  floor_log2(approx.denominator) == r.phi2;
  return verdict(ok, cat("denominator bits ", mpz_sizeinbase(approx.denominator.get_mpz_t(), 2)));
}

struct CheckSpec {
  const char* name;
  const char* subject;
  Outcome (*run)(Context&);
};

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = {
      {"partition", "classes partition Z_N^*, support sizes, Legendre parity", check_partition},
      {"cyclo-reflection", "cyclotomic numbers (i,j) = (d-i, j-i)", check_cyclo_reflection},
      {"cyclo-swap", "cyclotomic number symmetry by parity of ff'", check_cyclo_swap},
      {"cyclo-row-sum", "cyclotomic row sums ((p-2)(q-2)-1)/d + delta_i", check_cyclo_row_sum},
      {"mult-units", "unit multiplication permutes classes", check_mult_units},
      {"mult-multiples", "multiples of p or q times a class cover P or Q uniformly", check_mult_multiples},
      {"mult-cross", "aP and aQ for a in P or Q", check_mult_cross},
      {"mult-star", "multiplication on D0*, D1*", check_mult_star},
      {"minus-one", "class of -1", check_minus_one},
      {"shifted-intersection", "|D_i n (D_j + u)| for u in P u Q", check_shifted_intersection},
      {"char-sums", "character sums over P, Q and all Gauss periods", check_char_sums},
      {"gauss-product", "Omega0 * Omega1 closed form", check_gauss_product},
      {"gauss-squares", "Omega0^2 + Omega1^2", check_gauss_squares},
      {"spectrum", "S(w^a) five-case closed form", check_spectrum},
      {"generators", "cyclotomic and Legendre generators agree", check_generators},
      {"det", "exact circulant determinant equals closed form", check_det},
      {"gcd-det", "gcd(S(2), 2^N-1) divides gcd(det A, 2^N-1)", check_gcd_det},
      {"mersenne-gcd", "gcd(2^p-1, (2^N-1)/(2^p-1)) = gcd(2^p-1, q)", check_mersenne_gcd},
      {"gcd-structure", "gcd divides (2^p-1)(2^q-1)", check_gcd_structure},
      {"bound", "phi2 >= pq - p - q - 1", check_bound},
      {"twin-maximal", "twin primes give maximal 2-adic complexity", check_twin_maximal},
      {"raa", "rational approximation recovers the reduced denominator", check_raa},
  };
  return specs;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> verify_pair(const PrimePair& pair, const VerifyOptions& options) {
  if (options.only && std::find(check_names().begin(), check_names().end(), *options.only) == check_names().end()) {
    throw std::invalid_argument("unknown check '" + *options.only + "'");
  }
  Context ctx(pair, options);
  std::vector<CheckResult> results;
  for (const auto& spec : registry()) {
    if (options.only && *options.only != spec.name) continue;
    CheckResult r;
    r.name = spec.name;
    r.subject = spec.subject;
    try {
      auto outcome = spec.run(ctx);
      r.status = outcome.status;
      r.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == CheckStatus::Fail; });
}

std::vector<PrimePair> prime_pairs_up_to(u64 max_pq) {
  std::vector<PrimePair> out;
  for (u64 p = 3; p * (p + 2) <= max_pq; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 q = p + 2; p * q <= max_pq; q += 2) {
      if (is_prime(q)) out.emplace_back(p, q);
    }
  }
  return out;
}

std::vector<ScanRow> scan_pairs(u64 max_pq, unsigned jobs, bool with_attack) {
  const auto pairs = prime_pairs_up_to(max_pq);
  std::vector<ScanRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      const auto params = build_params(pairs[k]);
      const auto seq = generate_via_legendre(params);
      const auto report = two_adic_complexity(seq);
      const auto v = bound_verdict(params, report);
      ScanRow& row = rows[k];
      row.p = params.p;
      row.q = params.q;
      row.N = params.N;
      row.phi2 = report.phi2;
      row.bound = v.bound;
      row.holds = v.holds;
      row.maximal = report.maximal;
      row.twin = v.twin_prime;
      row.gcd = report.g.get_str();
      if (with_attack) {
        const auto atk = attack_report(seq);
        row.linear_complexity = atk.linear_complexity;
        row.raa_min_prefix = atk.raa_min_prefix;
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(pairs.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

}  // namespace seqlab
