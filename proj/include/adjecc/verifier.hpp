#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "adjecc/bitvec.hpp"
#include "adjecc/code_spec.hpp"
#include "adjecc/codec.hpp"

namespace adjecc {

enum class PatternClass { Single, DoubleAdjacent, TripleAdjacent, Other };

inline constexpr std::size_t pattern_class_count = 4;

std::string_view to_string(PatternClass cls);

/// Outcome counts for one pattern class. corrected + detected + miscorrected
/// == tested; `silent` counts the miscorrections that decoded as Clean
/// (the error was itself a codeword).
struct ClassTally {
  std::uint64_t tested = 0;
  std::uint64_t corrected = 0;
  std::uint64_t detected = 0;
  std::uint64_t miscorrected = 0;
  std::uint64_t silent = 0;

  ClassTally& operator+=(const ClassTally& other);
  friend bool operator==(const ClassTally&, const ClassTally&) = default;
};

/// Replayable record of a wrong decode: decoding encode(message) ^ error
/// gives `outcome`.
struct Miscorrection {
  BitVec message;
  BitVec error;
  std::optional<ErrorPattern> injected;
  DecodeOutcome outcome;

  friend bool operator==(const Miscorrection&, const Miscorrection&) = default;
};

struct VerificationReport {
  Capability level = Capability::Sec;
  std::uint64_t seed = 0;
  std::size_t messages = 0;
  std::array<ClassTally, pattern_class_count> classes{};
  /// At most `witness_limit` entries; tallies hold the full counts.
  std::vector<Miscorrection> witnesses;
  /// Every message produced the same per-class tallies as the zero message.
  bool message_independent = true;
  std::chrono::nanoseconds elapsed{0};

  static constexpr std::size_t witness_limit = 32;

  const ClassTally& tally(PatternClass cls) const { return classes[static_cast<std::size_t>(cls)]; }
  ClassTally& tally(PatternClass cls) { return classes[static_cast<std::size_t>(cls)]; }
  std::uint64_t total_miscorrected() const;

  /// Every correctable pattern was corrected and nothing was miscorrected.
  /// The Other class never affects the verdict.
  bool passed() const;

  /// Field-wise equality ignoring `elapsed`.
  bool same_outcome(const VerificationReport& other) const;
};

/// Injects every burst correctable at `level` (default: the code's own
/// capability) into the zero message plus `random_messages` seeded random
/// ones and tallies the decodes.
VerificationReport verify_exhaustive(const CodeSpec& spec, std::optional<Capability> level = {},
                                     std::uint64_t seed = 1, std::size_t random_messages = 100);

/// Samples errors outside the correctable classes: alternately a non-adjacent
/// double error and a contiguous burst of 4..n bits, each on a fresh random
/// message. Everything lands in the Other class; miscorrections are
/// expected here and only counted. Throws argument_error when samples == 0.
VerificationReport probe_uncorrectable(const CodeSpec& spec, std::size_t samples, std::uint64_t seed);

} // namespace adjecc
