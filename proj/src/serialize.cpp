#include "seqlab/serialize.hpp"

namespace seqlab {

std::string rational_string(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const SequenceParams& s) {
  return json{{"p", s.p},   {"q", s.q}, {"N", s.N}, {"d", s.d}, {"f", s.f},
              {"fprime", s.fprime}, {"g", s.g}, {"x", s.x}, {"L", s.L}};
}

json to_json(const BinarySequence& seq) {
  json j;
  j["source"] = std::string(to_string(seq.source()));
  j["N"] = seq.size();
  if (seq.params()) j["params"] = to_json(*seq.params());
  j["weight"] = seq.weight();
  j["bits"] = seq.to_string();
  return j;
}

json to_json(const CyclotomicTables& tables) {
  json j;
  j["p"] = tables.params().p;
  j["q"] = tables.params().q;
  json classes = json::array();
  for (u64 i = 0; i < tables.order(); ++i) classes.push_back(tables.cls(i));
  j["D"] = std::move(classes);
  j["P"] = tables.P();
  j["Q"] = tables.Q();
  return j;
}

json to_json(const SpectralProfile& profile) {
  json j;
  j["params"] = to_json(profile.params);
  j["case"] = std::string(to_string(profile.closed.kase));
  json etas = json::array();
  for (const auto& e : profile.periods.etas) etas.push_back(complex_json(e));
  j["etas"] = std::move(etas);
  j["omega0"] = complex_json(profile.periods.omega0);
  j["omega1"] = complex_json(profile.periods.omega1);
  j["omega_product_numeric"] = complex_json(profile.periods.omega0 * profile.periods.omega1);
  j["omega_product_exact"] = rational_string(profile.closed.product);
  j["radicand"] = profile.closed.radicand_sign > 0 ? "pq" : "-pq";
  j["realized_sign"] = profile.realized == 0 ? "+" : "-";
  json spectrum = json::object();
  for (const auto& v : profile.spectrum) {
    spectrum[std::string(to_string(v.cls))] = v.exact ? json(rational_string(*v.exact)) : complex_json(v.value);
  }
  j["spectrum"] = std::move(spectrum);
  j["det_closed"] = profile.det_closed.get_str();
  return j;
}

json to_json(const AdicReport& r) {
  json j;
  j["N"] = r.N;
  j["S2"] = r.S2.get_str();
  j["modulus"] = r.modulus.get_str();
  j["gcd"] = r.g.get_str();
  j["phi2"] = r.phi2;
  j["degenerate"] = r.degenerate;
  j["maximal"] = r.maximal;
  if (r.bound) j["bound"] = *r.bound;
  if (r.bound_holds) j["bound_holds"] = *r.bound_holds;
  if (r.gcd_divides_mersenne_product) j["gcd_divides_mersenne_product"] = *r.gcd_divides_mersenne_product;
  return j;
}

json to_json(const AttackReport& r) {
  json j;
  j["N"] = r.N;
  j["phi2"] = r.phi2;
  j["degenerate"] = r.degenerate;
  if (r.bound) j["bound"] = *r.bound;
  j["linear_complexity"] = r.linear_complexity ? json(*r.linear_complexity) : json(nullptr);
  j["raa_numerator"] = r.target.numerator.get_str();
  j["raa_denominator"] = r.target.denominator.get_str();
  j["raa_recovered"] = r.raa_recovered;
  j["raa_min_prefix"] = r.raa_min_prefix ? json(*r.raa_min_prefix) : json(nullptr);
  j["passes"] = r.passes;
  j["linear_passes"] = r.linear_passes ? json(*r.linear_passes) : json(nullptr);
  return j;
}

}  // namespace seqlab
