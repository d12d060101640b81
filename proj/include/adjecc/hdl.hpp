#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adjecc/code_spec.hpp"
#include "adjecc/xor_network.hpp"

namespace adjecc {

struct HdlPort {
  enum class Direction { Input, Output };
  Direction direction;
  std::string name;
  std::size_t width;

  friend bool operator==(const HdlPort&, const HdlPort&) = default;
};

/// A combinational Verilog module made only of continuous assignments.
///
/// Signal naming: i[j] message bits, c[j] codeword bits, p[j] parity,
/// s[j] syndrome, tN shared XOR temporaries, hit[j] pattern matches,
/// flip[j] per-position correction, m[j] corrected message. Vectors are
/// declared [1:w] so index 1 is the leftmost bit.
struct HdlArtifact {
  std::string module_name;
  std::vector<HdlPort> ports;
  std::string text;
};

/// Encoder module `<name>_encoder`: input i[1:k], output c[1:n]. One
/// assignment per program node, then one wire per codeword position in
/// layout order. Throws argument_error if `program` is not an encoder
/// program for `spec` (input/output names differ or its equations do).
HdlArtifact emit_encoder(const CodeSpec& spec, const XorProgram& program);

/// Decoder module `<name>_decoder`: input c[1:n]; outputs m[1:k],
/// `corrected` and `uncorrectable`. Syndrome XOR trees from the H rows, one
/// AND term per correctable burst comparing s against its syndrome, OR-ed
/// flip[j] per position, m = info bits XOR their flips, and
/// uncorrectable = (s != 0) & ~corrected.
/// Throws rejected_code if the code fails its capability.
HdlArtifact emit_decoder(const CodeSpec& spec);

/// Verilog-safe module prefix derived from the code name.
std::string hdl_identifier(const std::string& name);

} // namespace adjecc
