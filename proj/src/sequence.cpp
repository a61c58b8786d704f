#include "seqlab/sequence.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seqlab {

std::string_view to_string(SequenceSource source) {
  switch (source) {
    case SequenceSource::CyclotomicDef:
      return "cyclotomic-def";
    case SequenceSource::LegendreDef:
      return "legendre-def";
    case SequenceSource::External:
      return "external";
  }
  return "external";
}

BinarySequence::BinarySequence(std::size_t length, SequenceSource source,
                               std::optional<SequenceParams> params)
    : length_(length), words_((length + 63) / 64, 0), source_(source), params_(std::move(params)) {
  if (params_ && params_->N != length_) {
    throw std::invalid_argument("sequence length does not match N");
  }
}

BinarySequence BinarySequence::from_string(std::string_view bits, SequenceSource source,
                                           std::optional<SequenceParams> params) {
  BinarySequence seq(bits.size(), source, std::move(params));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      seq.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return seq;
}

BinarySequence BinarySequence::from_bits(const std::vector<int>& bits) {
  BinarySequence seq(bits.size(), SequenceSource::External);
  for (std::size_t i = 0; i < bits.size(); ++i) seq.set(i, bits[i] != 0);
  return seq;
}

void BinarySequence::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BinarySequence::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

BinarySequence BinarySequence::rotated(std::size_t k) const {
  BinarySequence out(length_, source_, params_);
  if (length_ == 0) return out;
  for (std::size_t i = 0; i < length_; ++i) out.set(i, (*this)[(i + k) % length_]);
  return out;
}

std::string BinarySequence::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

BinarySequence generate_modified_jacobi(const CyclotomicTables& tables) {
  const auto& params = tables.params();
  BinarySequence seq(params.N, SequenceSource::CyclotomicDef, params);
  for (u64 i = 0; i < params.N; ++i) {
    const auto l = tables.label(i);
    seq.set(i, l == CyclotomicTables::kLabelP || (l >= 0 && l % 2 == 1));
  }
  return seq;
}

BinarySequence generate_modified_jacobi(const SequenceParams& params) {
  return generate_modified_jacobi(build_tables(params));
}

namespace {

// chi[r] = Legendre symbol (r/p) for r in [0, p).
std::vector<std::int8_t> quadratic_character(u64 p) {
  std::vector<std::int8_t> chi(p, -1);
  chi[0] = 0;
  for (u64 r = 1; r <= (p - 1) / 2; ++r) chi[mul_mod(r, r, p)] = 1;
  return chi;
}

}  // namespace

BinarySequence generate_via_legendre(const SequenceParams& params) {
  const auto chi_p = quadratic_character(params.p);
  const auto chi_q = quadratic_character(params.q);
  BinarySequence seq(params.N, SequenceSource::LegendreDef, params);
  u64 rp = 0;
  u64 rq = 0;
  for (u64 i = 0; i < params.N; ++i) {
    if (rp == 0) {
      seq.set(i, rq != 0);  // P gives 1, R gives 0
    } else if (rq != 0) {
      seq.set(i, chi_p[rp] * chi_q[rq] == -1);
    }
    if (++rp == params.p) rp = 0;
    if (++rq == params.q) rq = 0;
  }
  return seq;
}

i64 autocorrelation(const BinarySequence& seq, std::size_t tau) {
  const std::size_t n = seq.size();
  if (n == 0) return 0;
  if (tau >= n) throw std::out_of_range("autocorrelation: shift must be in [0, N)");
  i64 acc = 0;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t u = t + tau;
    if (u >= n) u -= n;
    acc += (seq[u] == seq[t]) ? 1 : -1;
  }
  return acc;
}

void write_sequence_file(std::ostream& out, const BinarySequence& seq) {
  if (seq.params()) {
    out << seq.params()->p << ' ' << seq.params()->q << '\n';
  } else {
    out << "external " << seq.size() << '\n';
  }
  out << seq.to_string() << '\n';
}

BinarySequence read_sequence_file(std::istream& in) {
  std::string header;
  std::string bits;
  if (!std::getline(in, header)) throw std::runtime_error("sequence file: missing header line");
  if (!std::getline(in, bits)) throw std::runtime_error("sequence file: missing bit line");
  if (!bits.empty() && bits.back() == '\r') bits.pop_back();

  std::istringstream hs(header);
  std::string first;
  hs >> first;
  if (first == "external") {
    std::size_t n = 0;
    if (!(hs >> n)) throw std::runtime_error("sequence file: bad external header");
    if (n != bits.size()) throw std::runtime_error("sequence file: header length does not match bit count");
    try {
      return BinarySequence::from_string(bits);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("sequence file: ") + e.what());
    }
  }

  u64 p = 0;
  u64 q = 0;
  try {
    p = std::stoull(first);
  } catch (const std::exception&) {
    throw std::runtime_error("sequence file: header must be \"p q\" or \"external N\"");
  }
  if (!(hs >> q)) throw std::runtime_error("sequence file: header must be \"p q\" or \"external N\"");
  SequenceParams params;
  try {
    params = build_params(PrimePair(p, q));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("sequence file: ") + e.what());
  }
  if (bits.size() != params.N) throw std::runtime_error("sequence file: bit count does not equal p*q");
  try {
    return BinarySequence::from_string(bits, SequenceSource::External, params);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("sequence file: ") + e.what());
  }
}

}  // namespace seqlab
