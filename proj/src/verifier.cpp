#include "adjecc/verifier.hpp"

#include "adjecc/errors.hpp"
#include "adjecc/random.hpp"

namespace adjecc {

std::string_view to_string(PatternClass cls) {
  switch (cls) {
  case PatternClass::Single: return "single";
  case PatternClass::DoubleAdjacent: return "double-adjacent";
  case PatternClass::TripleAdjacent: return "triple-adjacent";
  case PatternClass::Other: return "other";
  }
  return "?";
}

ClassTally& ClassTally::operator+=(const ClassTally& other) {
  tested += other.tested;
  corrected += other.corrected;
  detected += other.detected;
  miscorrected += other.miscorrected;
  silent += other.silent;
  return *this;
}

std::uint64_t VerificationReport::total_miscorrected() const {
  std::uint64_t total = 0;
  for (const auto& t : classes) total += t.miscorrected;
  return total;
}

bool VerificationReport::passed() const {
  for (std::size_t c = 0; c + 1 < pattern_class_count; ++c)
    if (classes[c].miscorrected != 0 || classes[c].detected != 0) return false;
  return true;
}

bool VerificationReport::same_outcome(const VerificationReport& other) const {
  return level == other.level && seed == other.seed && messages == other.messages &&
         classes == other.classes && witnesses == other.witnesses &&
         message_independent == other.message_independent;
}

namespace {

PatternClass class_of_width(std::size_t width) {
  switch (width) {
  case 1: return PatternClass::Single;
  case 2: return PatternClass::DoubleAdjacent;
  default: return PatternClass::TripleAdjacent;
  }
}

// Decodes codeword ^ error and scores it against the known message.
void score(const SyndromeDecoder& decoder, const BitVec& message, const BitVec& codeword,
           const BitVec& error, std::optional<ErrorPattern> injected, ClassTally& tally,
           VerificationReport& report) {
  const DecodeOutcome outcome = decoder.decode(codeword ^ error);
  ++tally.tested;
  bool wrong = false;
  switch (outcome.kind) {
  case DecodeKind::DetectedUncorrectable: ++tally.detected; return;
  case DecodeKind::Clean:
    // Only reachable with a codeword-valued error; the message is then wrong.
    wrong = outcome.message != message;
    if (wrong) ++tally.silent;
    break;
  case DecodeKind::Corrected:
    wrong = outcome.message != message || (injected && outcome.error_span != injected);
    break;
  }
  if (!wrong) {
    ++tally.corrected;
    return;
  }
  ++tally.miscorrected;
  if (report.witnesses.size() < VerificationReport::witness_limit)
    report.witnesses.push_back({message, error, injected, outcome});
}

} // namespace

VerificationReport verify_exhaustive(const CodeSpec& spec, std::optional<Capability> level,
                                     std::uint64_t seed, std::size_t random_messages) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.level = level.value_or(spec.capability());
  report.seed = seed;

  const SyndromeDecoder decoder(spec, TableConflicts::KeepFirst);
  const auto patterns = correctable_patterns(spec.n(), report.level);
  std::vector<BitVec> errors;
  errors.reserve(patterns.size());
  for (const auto& p : patterns) errors.push_back(pattern_vector(spec.n(), p));

  Rng rng(seed);
  std::array<ClassTally, pattern_class_count> baseline{};
  for (std::size_t m = 0; m <= random_messages; ++m) {
    const BitVec message = m == 0 ? BitVec(spec.k()) : rng.bits(spec.k());
    const BitVec codeword = encode(spec, message);
    std::array<ClassTally, pattern_class_count> local{};
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      auto& tally = local[static_cast<std::size_t>(class_of_width(patterns[i].width))];
      score(decoder, message, codeword, errors[i], patterns[i], tally, report);
    }
    if (m == 0)
      baseline = local;
    else if (local != baseline)
      report.message_independent = false;
    for (std::size_t c = 0; c < pattern_class_count; ++c) report.classes[c] += local[c];
    ++report.messages;
  }

  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

VerificationReport probe_uncorrectable(const CodeSpec& spec, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw argument_error("probe needs at least one sample");
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.level = spec.capability();
  report.seed = seed;

  const std::size_t n = spec.n();
  const bool doubles = n >= 3;
  const bool bursts = n >= 4;
  if (!doubles && !bursts) throw argument_error("word too short for uncorrectable patterns");

  const SyndromeDecoder decoder(spec, TableConflicts::KeepFirst);
  Rng rng(seed);
  auto& tally = report.tally(PatternClass::Other);
  for (std::size_t s = 0; s < samples; ++s) {
    const BitVec message = rng.bits(spec.k());
    const BitVec codeword = encode(spec, message);
    BitVec error(n);
    if (doubles && (!bursts || s % 2 == 0)) {
      // Two positions at least two apart.
      std::size_t a, b;
      do {
        a = 1 + rng.uniform_below(n);
        b = 1 + rng.uniform_below(n);
      } while ((a > b ? a - b : b - a) < 2);
      error.set(a);
      error.set(b);
    } else {
      const std::size_t width = 4 + rng.uniform_below(n - 3);
      const std::size_t start = 1 + rng.uniform_below(n - width + 1);
      error = pattern_vector(n, {start, width});
    }
    score(decoder, message, codeword, error, std::nullopt, tally, report);
    ++report.messages;
  }

  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

} // namespace adjecc
