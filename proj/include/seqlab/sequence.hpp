#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqlab/cyclotomy.hpp"

namespace seqlab {

enum class SequenceSource : std::uint8_t { CyclotomicDef, LegendreDef, External };

std::string_view to_string(SequenceSource source);

// One period of a binary sequence, bit-packed 64 per word (LSB first).
class BinarySequence {
 public:
  BinarySequence() = default;
  BinarySequence(std::size_t length, SequenceSource source,
                 std::optional<SequenceParams> params = std::nullopt);

  // Parses an ASCII 0/1 string; throws std::invalid_argument on other characters.
  static BinarySequence from_string(std::string_view bits,
                                    SequenceSource source = SequenceSource::External,
                                    std::optional<SequenceParams> params = std::nullopt);
  static BinarySequence from_bits(const std::vector<int>& bits);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value);

  std::size_t weight() const;
  bool all_zero() const { return weight() == 0; }

  // Left rotation: result[i] = this[(i + k) mod N].
  BinarySequence rotated(std::size_t k) const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  SequenceSource source() const { return source_; }
  const std::optional<SequenceParams>& params() const { return params_; }

  // Bits only; provenance is not compared.
  friend bool operator==(const BinarySequence& a, const BinarySequence& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
  SequenceSource source_ = SequenceSource::External;
  std::optional<SequenceParams> params_;
};

// s_i = 1 iff i mod N is in C1 = D1* u P, read from the materialized classes.
BinarySequence generate_modified_jacobi(const CyclotomicTables& tables);
BinarySequence generate_modified_jacobi(const SequenceParams& params);

// Same sequence from the Legendre-symbol rule; usable at any N.
BinarySequence generate_via_legendre(const SequenceParams& params);

// A(tau) = sum_t (-1)^(s_{t+tau} - s_t).
i64 autocorrelation(const BinarySequence& seq, std::size_t tau);

// Sequence file: "p q" or "external N" on line 1, the ASCII bit string on line 2.
void write_sequence_file(std::ostream& out, const BinarySequence& seq);

// Throws std::runtime_error on malformed input. For a "p q" header the bits
// must match the generated modified Jacobi sequence length.
BinarySequence read_sequence_file(std::istream& in);

}  // namespace seqlab
