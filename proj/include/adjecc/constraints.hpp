#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "adjecc/bitvec.hpp"
#include "adjecc/check_matrix.hpp"
#include "adjecc/code_spec.hpp"

namespace adjecc {

enum class Constraint { Sec, Daec, Taec };

/// Two correctable patterns sharing a syndrome, or one pattern with a zero
/// syndrome (`second` empty: indistinguishable from an error-free word).
struct Violation {
  Constraint constraint;
  ErrorPattern first;
  std::optional<ErrorPattern> second;
  BitVec syndrome;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of the column constraints.
///
///   sec_ok   every column non-zero and distinct
///   daec_ok  every adjacent-pair sum non-zero, distinct from the other pair
///            sums and from every single column
///   taec_ok  every adjacent-triple sum non-zero and the union of single,
///            pair and triple syndromes collision-free
///
/// `literal_taec_ok` is the weaker textbook condition that only compares
/// triple sums against single columns; it is informational and never used
/// to accept a code. Violations are listed per constraint in scan order
/// (width, then start), so the first one per constraint is the
/// smallest-index witness.
struct ConstraintReport {
  bool sec_ok = true;
  bool daec_ok = true;
  bool taec_ok = true;
  bool literal_taec_ok = true;
  std::vector<Violation> violations;

  bool satisfies(Capability capability) const;
  const Violation* first_violation(Constraint constraint) const;
};

ConstraintReport check_sec(std::span<const BitVec> columns);
ConstraintReport check_daec(std::span<const BitVec> columns);
ConstraintReport check_taec(std::span<const BitVec> columns);

/// All three checks merged.
ConstraintReport check_all(std::span<const BitVec> columns);

inline ConstraintReport check_sec(const CheckMatrix& h) { return check_sec(h.columns()); }
inline ConstraintReport check_daec(const CheckMatrix& h) { return check_daec(h.columns()); }
inline ConstraintReport check_taec(const CheckMatrix& h) { return check_taec(h.columns()); }
inline ConstraintReport check_all(const CheckMatrix& h) { return check_all(h.columns()); }

/// XOR of the columns covered by `pattern`.
BitVec pattern_syndrome(std::span<const BitVec> columns, ErrorPattern pattern);

/// A matrix was refused for a capability; carries the report explaining why.
class rejected_code : public std::runtime_error {
public:
  rejected_code(const std::string& what, ConstraintReport report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const ConstraintReport& report() const noexcept { return report_; }

private:
  ConstraintReport report_;
};

/// Throws rejected_code unless the matrix satisfies `capability`.
void require_capability(const CheckMatrix& h, Capability capability);

} // namespace adjecc
