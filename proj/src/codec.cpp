#include "adjecc/codec.hpp"

#include "adjecc/check_matrix.hpp"
#include "adjecc/constraints.hpp"
#include "adjecc/errors.hpp"

namespace adjecc {

std::string_view to_string(DecodeKind kind) {
  switch (kind) {
  case DecodeKind::Clean: return "Clean";
  case DecodeKind::Corrected: return "Corrected";
  case DecodeKind::DetectedUncorrectable: return "DetectedUncorrectable";
  }
  return "?";
}

BitVec encode_parity_shared_2316(const BitVec& message) {
  if (message.size() != 16)
    throw argument_error("built-in code takes 16-bit messages, got " + std::to_string(message.size()));
  BitVec parity(7);
  for (const auto& eq : builtin_2316_shared_equations()) {
    bool bit = false;
    for (auto j : eq.info_terms) bit ^= message.test(j);
    if (eq.parity_term) bit ^= parity.test(*eq.parity_term);
    parity.set(eq.parity, bit);
  }
  return parity;
}

BitVec encode_parity(const CodeSpec& spec, const BitVec& message) {
  if (message.size() != spec.k())
    throw argument_error("message has " + std::to_string(message.size()) + " bits, expected " +
                         std::to_string(spec.k()));
  return is_builtin_2316(spec) ? encode_parity_shared_2316(message) : solve_parity(spec, message);
}

BitVec encode(const CodeSpec& spec, const BitVec& message) {
  return assemble(spec, message, encode_parity(spec, message));
}

BitVec compute_syndrome(const CodeSpec& spec, const BitVec& received) {
  return mat_vec_mul(spec.matrix(), received);
}

SyndromeDecoder::SyndromeDecoder(CodeSpec spec, TableConflicts conflicts) : spec_(std::move(spec)) {
  const auto columns = spec_.matrix().columns();
  const bool reject = conflicts == TableConflicts::Reject;
  for (const auto& pattern : correctable_patterns(spec_.n(), spec_.capability())) {
    BitVec s = pattern_syndrome(columns, pattern);
    if (s.none() && !reject) continue;
    if (s.none())
      throw argument_error("burst at " + std::to_string(pattern.start) + " width " +
                           std::to_string(pattern.width) + " has a zero syndrome");
    auto [it, inserted] = table_.emplace(std::move(s), pattern);
    if (!inserted && reject)
      throw argument_error("syndrome " + it->first.to_string() + " shared by bursts at " +
                           std::to_string(it->second.start) + "/" + std::to_string(it->second.width) +
                           " and " + std::to_string(pattern.start) + "/" +
                           std::to_string(pattern.width));
  }
}

DecodeOutcome SyndromeDecoder::decode(const BitVec& received) const {
  DecodeOutcome out;
  out.syndrome = compute_syndrome(spec_, received);
  if (out.syndrome.none()) {
    out.kind = DecodeKind::Clean;
    out.message = disassemble(spec_, received).info;
    return out;
  }
  const auto it = table_.find(out.syndrome);
  if (it == table_.end()) {
    out.kind = DecodeKind::DetectedUncorrectable;
    out.message = disassemble(spec_, received).info;
    return out;
  }
  out.kind = DecodeKind::Corrected;
  out.error_span = it->second;
  out.message = disassemble(spec_, received ^ pattern_vector(spec_.n(), it->second)).info;
  return out;
}

DecodeOutcome decode(const CodeSpec& spec, const BitVec& received) {
  return SyndromeDecoder(spec).decode(received);
}

} // namespace adjecc
