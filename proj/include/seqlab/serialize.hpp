#pragma once

#include <string>

#include <json.hpp>

#include "seqlab/adic.hpp"
#include "seqlab/attack.hpp"
#include "seqlab/cyclotomy.hpp"
#include "seqlab/sequence.hpp"
#include "seqlab/spectral.hpp"

namespace seqlab {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// "-5", "1/4"
std::string rational_string(const mpq_class& v);
json complex_json(const cplx& z);

json to_json(const SequenceParams& params);
json to_json(const BinarySequence& seq);
json to_json(const CyclotomicTables& tables);  // {"p","q","D","P","Q"}
json to_json(const SpectralProfile& profile);
json to_json(const AdicReport& report);
json to_json(const AttackReport& report);

}  // namespace seqlab
