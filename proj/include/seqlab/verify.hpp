#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqlab/cyclotomy.hpp"

namespace seqlab {

enum class CheckStatus : std::uint8_t { Pass, Fail, Skip };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;     // stable identifier accepted by --only
  std::string subject;  // what identity the check exercises
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct VerifyOptions {
  double tolerance = 1e-6;       // Gauss period product
  double spectrum_tolerance = 1e-8;  // multiplied by N
  u64 oracle_max_n = 40;         // exact circulant determinant
  u64 exhaustive_max_n = 5'000;   // quadratic-cost cyclotomic checks
  u64 spectrum_max_n = 2'000;    // O(N^2) spectrum evaluation
  u64 raa_max_n = 5'000;
  std::optional<std::string> only;
};

// Names of every check, in execution order.
const std::vector<std::string>& check_names();

// Runs the identity suite for one prime pair. Throws std::invalid_argument
// when options.only names an unknown check.
std::vector<CheckResult> verify_pair(const PrimePair& pair, const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// All prime pairs 3 <= p < q with p*q <= max_pq, sorted by (p, q).
std::vector<PrimePair> prime_pairs_up_to(u64 max_pq);

struct ScanRow {
  u64 p = 0;
  u64 q = 0;
  u64 N = 0;
  u64 phi2 = 0;
  i64 bound = 0;
  bool holds = false;
  bool maximal = false;
  bool twin = false;
  std::string gcd;
  std::optional<u64> linear_complexity;
  std::optional<u64> raa_min_prefix;
};

// Exact 2-adic complexity against the lower bound for every pair, fanned out
// over `jobs` worker threads (0 = hardware concurrency). Rows come back in
// (p, q) order regardless of scheduling.
std::vector<ScanRow> scan_pairs(u64 max_pq, unsigned jobs, bool with_attack);

}  // namespace seqlab
