#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqlab/adic.hpp"
#include "seqlab/attack.hpp"
#include "seqlab/cyclotomy.hpp"
#include "seqlab/sequence.hpp"
#include "seqlab/serialize.hpp"
#include "seqlab/spectral.hpp"
#include "seqlab/verify.hpp"

namespace seqlab {

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::optional<u64> p;
  std::optional<u64> q;
  bool scan = false;
  u64 max_pq = 3000;
  Format format = Format::Text;
  std::string out_path;
  double tolerance = 1e-6;
  u64 oracle_max_n = kDeterminantOracleLimit;
  unsigned jobs = 0;
  std::optional<std::string> only;
  std::string input;
  bool dump_tables = false;
  std::vector<u64> ladder = {15, 143, 1763, 10403};
  unsigned repeat = 5;
};

// Usage problems detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  json doc;
  std::string text;
  std::string csv;
  int exit_code = kExitOk;
};

json envelope(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// "key: value" lines for every leaf, so text and JSON carry the same numbers.
void flatten(const json& v, const std::string& prefix, std::ostream& os) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) flatten(child, prefix.empty() ? key : prefix + "." + key, os);
  } else if (v.is_array() && !v.empty() && (v.front().is_structured())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", os);
  } else if (v.is_array()) {
    os << prefix << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << "]\n";
  } else {
    os << prefix << ": " << scalar_text(v) << '\n';
  }
}

std::string flatten_text(const json& v) {
  std::ostringstream os;
  flatten(v, "", os);
  return os.str();
}

// RFC 4180 quoting for fields with separators, quotes or line breaks.
std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  const std::string raw = scalar_text(v);
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string csv_table(const std::vector<std::string>& columns, const json& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = row.find(columns[i]);
      os << (i ? "," : "") << (it == row.end() ? std::string() : csv_field(*it));
    }
    os << '\n';
  }
  return os.str();
}

PrimePair require_pair(const RunConfig& cfg) {
  if (!cfg.p || !cfg.q) throw UsageError("--p and --q are required");
  try {
    return PrimePair(*cfg.p, *cfg.q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json attack_row(const SequenceParams& prm, const AttackReport& atk) {
  json row;
  row["p"] = prm.p;
  row["q"] = prm.q;
  auto body = to_json(atk);
  for (const auto& [k, v] : body.items()) row[k] = v;
  return row;
}

const std::vector<std::string> kAttackColumns = {"p",      "q",      "N",                 "phi2",
                                                 "bound",  "linear_complexity", "raa_min_prefix", "passes",
                                                 "linear_passes"};

CommandResult cmd_gen(const RunConfig& cfg) {
  const auto pair = require_pair(cfg);
  const auto params = build_params(pair);
  const auto seq = params.N <= kMaterializeLimit ? generate_modified_jacobi(params) : generate_via_legendre(params);
  CommandResult r;
  r.doc = envelope("gen");
  r.doc["params"] = to_json(params);
  r.doc["sequence"] = to_json(seq);
  std::ostringstream os;
  write_sequence_file(os, seq);
  r.text = os.str();
  return r;
}

BinarySequence load_input(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot open " + cfg.input);
    try {
      return read_sequence_file(in);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  return generate_via_legendre(build_params(require_pair(cfg)));
}

CommandResult cmd_analyze(const RunConfig& cfg) {
  const auto seq = load_input(cfg);
  const auto adic = two_adic_complexity(seq);
  const auto atk = attack_report(seq);
  CommandResult r;
  r.doc = envelope("analyze");
  r.doc["sequence"] = {{"source", std::string(to_string(seq.source()))}, {"N", seq.size()}, {"weight", seq.weight()}};
  if (seq.params()) {
    r.doc["params"] = to_json(*seq.params());
    const auto v = bound_verdict(*seq.params(), adic);
    r.doc["verdict"] = {{"bound", v.bound},
                        {"holds", v.holds},
                        {"twin_prime", v.twin_prime},
                        {"twin_prime_maximal", v.twin_prime_maximal}};
    const auto diag = gcd_structure(*seq.params(), adic);
    r.doc["gcd_structure"] = {{"g_p", diag.g_p.get_str()},
                              {"g_q", diag.g_q.get_str()},
                              {"divides_product", diag.divides_product},
                              {"cofactor_gcd", diag.cofactor_gcd.get_str()},
                              {"correction", diag.mersenne_correction.get_str()},
                              {"cofactor_within_correction", diag.cofactor_within_correction}};
  }
  r.doc["adic"] = to_json(adic);
  r.doc["attack"] = to_json(atk);
  r.text = flatten_text(r.doc);

  json row = seq.params() ? attack_row(*seq.params(), atk) : to_json(atk);
  r.csv = csv_table(kAttackColumns, json::array({row}));
  return r;
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
  const auto params = build_params(require_pair(cfg));
  if (params.N > kNumericLimit) throw UsageError("spectrum needs N <= " + std::to_string(kNumericLimit));
  const CyclotomicTables tables(params);
  const auto profile = spectral_profile(tables);
  CommandResult r;
  r.doc = envelope("spectrum");
  r.doc["profile"] = to_json(profile);
  if (cfg.dump_tables) r.doc["tables"] = to_json(tables);
  r.text = flatten_text(r.doc);
  return r;
}

json scan_row_json(const ScanRow& row) {
  json j;
  j["p"] = row.p;
  j["q"] = row.q;
  j["N"] = row.N;
  j["phi2"] = row.phi2;
  j["bound"] = row.bound;
  j["holds"] = row.holds;
  j["maximal"] = row.maximal;
  j["twin"] = row.twin;
  j["gcd"] = row.gcd;
  if (row.linear_complexity) j["linear_complexity"] = *row.linear_complexity;
  if (row.raa_min_prefix) j["raa_min_prefix"] = *row.raa_min_prefix;
  return j;
}

CommandResult scan_result(const RunConfig& cfg, const std::string& command, bool with_attack) {
  if (cfg.max_pq < 15) throw UsageError("--max-pq must be at least 15");
  const auto rows = scan_pairs(cfg.max_pq, cfg.jobs, with_attack);
  CommandResult r;
  r.doc = envelope(command);
  r.doc["max_pq"] = cfg.max_pq;
  json arr = json::array();
  std::size_t violations = 0;
  std::size_t twin_failures = 0;
  std::ostringstream text;
  text << std::setw(6) << "p" << std::setw(6) << "q" << std::setw(8) << "N" << std::setw(8) << "phi2" << std::setw(8)
       << "bound" << "  verdict\n";
  for (const auto& row : rows) {
    arr.push_back(scan_row_json(row));
    if (!row.holds) ++violations;
    if (row.twin && !row.maximal) ++twin_failures;
    text << std::setw(6) << row.p << std::setw(6) << row.q << std::setw(8) << row.N << std::setw(8) << row.phi2
         << std::setw(8) << row.bound << "  " << (row.holds ? "PASS" : "FAIL") << (row.maximal ? " maximal" : "")
         << '\n';
  }
  r.doc["pairs"] = rows.size();
  r.doc["violations"] = violations;
  r.doc["twin_failures"] = twin_failures;
  r.doc["rows"] = arr;
  text << rows.size() << " pairs, " << violations << " violations, " << twin_failures << " twin-prime failures\n";
  r.text = text.str();
  std::vector<std::string> columns = {"p", "q", "N", "phi2", "bound", "holds", "maximal", "twin", "gcd"};
  if (with_attack) {
    columns.emplace_back("linear_complexity");
    columns.emplace_back("raa_min_prefix");
  }
  r.csv = csv_table(columns, arr);
  r.exit_code = (violations == 0 && twin_failures == 0) ? kExitOk : kExitCheckFailed;
  return r;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  if (cfg.scan) return scan_result(cfg, "verify", false);
  const auto pair = require_pair(cfg);
  VerifyOptions opts;
  opts.tolerance = cfg.tolerance;
  opts.oracle_max_n = cfg.oracle_max_n;
  opts.only = cfg.only;
  std::vector<CheckResult> results;
  try {
    results = verify_pair(pair, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  CommandResult r;
  r.doc = envelope("verify");
  r.doc["p"] = pair.p();
  r.doc["q"] = pair.q();
  json checks = json::array();
  std::ostringstream text;
  for (const auto& c : results) {
    checks.push_back({{"name", c.name},
                      {"subject", c.subject},
                      {"status", std::string(to_string(c.status))},
                      {"detail", c.detail}});
    text << to_string(c.status) << "  " << std::left << std::setw(22) << c.name << c.detail << '\n';
  }
  const bool ok = all_passed(results);
  r.doc["checks"] = checks;
  r.doc["passed"] = ok;
  text << (ok ? "all checks passed" : "FAILED") << '\n';
  r.text = text.str();
  r.csv = csv_table({"name", "status", "detail"}, checks);
  r.exit_code = ok ? kExitOk : kExitCheckFailed;
  return r;
}

std::pair<u64, u64> split_semiprime(u64 n) {
  const auto factors = prime_factors(n);
  if (factors.size() != 2 || factors[0] * factors[1] != n) {
    throw UsageError("ladder entry " + std::to_string(n) + " is not a product of two distinct primes");
  }
  return {factors[0], factors[1]};
}

struct Stats {
  double median = 0;
  double stddev = 0;
};

Stats stats(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  Stats s;
  s.median = v[v.size() / 2];
  double mean = 0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double x : v) s.stddev += (x - mean) * (x - mean);
  s.stddev = std::sqrt(s.stddev / static_cast<double>(v.size()));
  return s;
}

// Milliseconds per call of fn, averaged over enough calls to fill ~2 ms.
template <typename Fn>
double time_ms(Fn&& fn) {
  using clock = std::chrono::steady_clock;
  std::size_t iters = 1;
  while (true) {
    const auto t0 = clock::now();
    for (std::size_t i = 0; i < iters; ++i) fn();
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    if (ms >= 2.0 || iters >= (std::size_t{1} << 24)) return ms / static_cast<double>(iters);
    iters *= 2;
  }
}

CommandResult cmd_bench(const RunConfig& cfg) {
  if (cfg.ladder.empty()) throw UsageError("--ladder must not be empty");
  if (cfg.repeat == 0) throw UsageError("--repeat must be positive");
  CommandResult r;
  r.doc = envelope("bench");
  json rows = json::array();
  std::ostringstream text;
  text << std::setw(10) << "N" << std::setw(14) << "build_ms" << std::setw(14) << "gcd_ms" << std::setw(14)
       << "gcd_sd_ms\n";
  for (u64 n : cfg.ladder) {
    const auto [p, q] = split_semiprime(n);
    SequenceParams params;
    try {
      params = build_params(PrimePair(p, q));
    } catch (const std::invalid_argument& e) {
      throw UsageError("ladder entry " + std::to_string(n) + ": " + e.what());
    }
    std::vector<double> build;
    std::vector<double> gcds;
    mpz_class s2;
    const mpz_class modulus = mersenne(params.N);
    for (unsigned k = 0; k < cfg.repeat; ++k) {
      build.push_back(time_ms([&] { s2 = s_of_2(generate_via_legendre(params)); }));
      mpz_class g;
      gcds.push_back(time_ms([&] { g = gcd(s2, modulus); }));
    }
    const auto b = stats(build);
    const auto g = stats(gcds);
    rows.push_back({{"N", n}, {"build_ms", b.median}, {"gcd_ms", g.median}, {"build_ms_sd", b.stddev},
                    {"gcd_ms_sd", g.stddev}, {"repeat", cfg.repeat}});
    text << std::setw(10) << n << std::setw(14) << b.median << std::setw(14) << g.median << std::setw(14) << g.stddev
         << '\n';
  }
  r.doc["rows"] = rows;
  r.text = text.str();
  r.csv = csv_table({"N", "build_ms", "gcd_ms"}, rows);
  return r;
}

void emit(const CommandResult& r, const RunConfig& cfg, std::ostream& out) {
  std::string payload;
  switch (cfg.format) {
    case Format::Json:
      payload = r.doc.dump(2) + "\n";
      break;
    case Format::Csv:
      if (r.csv.empty()) throw UsageError("csv output is not available for this command");
      payload = r.csv;
      break;
    case Format::Text:
      payload = r.text;
      break;
  }
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw UsageError("cannot write " + cfg.out_path);
  file << payload;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"seqlab: Whiteman cyclotomy, modified Jacobi sequences and their 2-adic complexity"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats = {{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--p", cfg.p, "smaller odd prime");
  app.add_option("--q", cfg.q, "larger odd prime");
  app.add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
  app.add_option("--tolerance", cfg.tolerance, "numeric tolerance for Gauss period checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-max-n", cfg.oracle_max_n, "largest N for the exact determinant oracle");
  app.add_option("--jobs", cfg.jobs, "worker threads for scans (0 = all cores)");

  auto* gen = app.add_subcommand("gen", "write the modified Jacobi sequence for (p, q)");
  auto* analyze = app.add_subcommand("analyze", "2-adic complexity and attack report");
  analyze->add_option("file", cfg.input, "sequence file (defaults to generating from --p/--q)");
  auto* spectrum = app.add_subcommand("spectrum", "Gauss periods, spectrum and closed-form determinant");
  spectrum->add_flag("--tables", cfg.dump_tables, "include the cyclotomic classes");
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_flag("--scan", cfg.scan, "check the lower bound for every pair up to --max-pq");
  verify->add_option("--max-pq", cfg.max_pq, "largest p*q for --scan");
  verify->add_option("--only", cfg.only, "run a single check")->check(CLI::IsMember(check_names()));
  auto* scan = app.add_subcommand("scan", "2-adic and attack table for every pair up to --max-pq");
  scan->add_option("--max-pq", cfg.max_pq, "largest p*q");
  auto* bench = app.add_subcommand("bench", "time S(2) construction and the big-integer gcd");
  bench->add_option("--ladder", cfg.ladder, "semiprime N values")->delimiter(',');
  bench->add_option("--repeat", cfg.repeat, "repetitions per N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    CommandResult result;
    if (*gen) {
      result = cmd_gen(cfg);
    } else if (*analyze) {
      result = cmd_analyze(cfg);
    } else if (*spectrum) {
      result = cmd_spectrum(cfg);
    } else if (*verify) {
      result = cmd_verify(cfg);
    } else if (*scan) {
      result = scan_result(cfg, "scan", true);
    } else {
      result = cmd_bench(cfg);
    }
    emit(result, cfg, out);
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace seqlab
