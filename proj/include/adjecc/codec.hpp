#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>

#include "adjecc/bitvec.hpp"
#include "adjecc/code_spec.hpp"

namespace adjecc {

enum class DecodeKind { Clean, Corrected, DetectedUncorrectable };

std::string_view to_string(DecodeKind kind);

struct DecodeOutcome {
  DecodeKind kind = DecodeKind::Clean;
  /// Decoded message (k bits); the raw received message bits when uncorrectable.
  BitVec message;
  /// Present iff kind == Corrected.
  std::optional<ErrorPattern> error_span;
  BitVec syndrome;

  friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;
};

/// Parity bits for `message`. The built-in (23,16) code evaluates its
/// hand-factored equations; every other code uses solve_parity.
BitVec encode_parity(const CodeSpec& spec, const BitVec& message);

/// Parity of the built-in code from its shared equations, in dependency
/// order p3, p6, p4, p7, p1, p2, p5.
BitVec encode_parity_shared_2316(const BitVec& message);

BitVec encode(const CodeSpec& spec, const BitVec& message);

BitVec compute_syndrome(const CodeSpec& spec, const BitVec& received);

enum class TableConflicts {
  /// Throw argument_error on a shared or zero syndrome.
  Reject,
  /// Keep the earliest pattern in (width, start) order; skip zero syndromes.
  KeepFirst,
};

/// Table-driven decoder: syndrome -> correctable burst, built once.
///
/// By default construction throws if two correctable patterns share a
/// syndrome or a pattern has a zero syndrome, so a code that was never run
/// through the constraint checker cannot silently miscorrect. The verifier
/// builds with KeepFirst so that such codes show up as miscorrections.
class SyndromeDecoder {
public:
  explicit SyndromeDecoder(CodeSpec spec, TableConflicts conflicts = TableConflicts::Reject);

  DecodeOutcome decode(const BitVec& received) const;

  const CodeSpec& spec() const noexcept { return spec_; }
  std::size_t table_size() const noexcept { return table_.size(); }

private:
  CodeSpec spec_;
  std::unordered_map<BitVec, ErrorPattern, BitVecHash> table_;
};

/// One-shot convenience; builds a SyndromeDecoder per call.
DecodeOutcome decode(const CodeSpec& spec, const BitVec& received);

} // namespace adjecc
