#include "adjecc/constraints.hpp"

#include <unordered_map>
#include <unordered_set>

namespace adjecc {

bool ConstraintReport::satisfies(Capability capability) const {
  switch (capability) {
  case Capability::Sec: return sec_ok;
  case Capability::SecDaec: return sec_ok && daec_ok;
  case Capability::SecDaecTaec: return sec_ok && daec_ok && taec_ok;
  }
  return false;
}

const Violation* ConstraintReport::first_violation(Constraint constraint) const {
  for (const auto& v : violations)
    if (v.constraint == constraint) return &v;
  return nullptr;
}

BitVec pattern_syndrome(std::span<const BitVec> columns, ErrorPattern pattern) {
  BitVec s = columns[pattern.start - 1];
  for (std::size_t p = pattern.start + 1; p < pattern.start + pattern.width; ++p) s ^= columns[p - 1];
  return s;
}

namespace {

using SyndromeIndex = std::unordered_map<BitVec, ErrorPattern, BitVecHash>;

std::vector<ErrorPattern> patterns_of_width(std::size_t n, std::size_t width) {
  std::vector<ErrorPattern> out;
  for (std::size_t start = 1; start + width - 1 <= n; ++start) out.push_back({start, width});
  return out;
}

// Records `pattern` in `seen` and appends a violation if its syndrome is
// zero or already present. The first pattern to claim a syndrome keeps it.
bool scan(std::span<const BitVec> columns, ErrorPattern pattern, Constraint constraint,
          SyndromeIndex& seen, std::vector<Violation>& out) {
  BitVec s = pattern_syndrome(columns, pattern);
  bool ok = true;
  if (s.none()) {
    out.push_back({constraint, pattern, std::nullopt, s});
    ok = false;
  } else if (auto it = seen.find(s); it != seen.end()) {
    out.push_back({constraint, it->second, pattern, s});
    ok = false;
  }
  seen.emplace(std::move(s), pattern);
  return ok;
}

} // namespace

ConstraintReport check_sec(std::span<const BitVec> columns) {
  ConstraintReport report;
  SyndromeIndex seen;
  for (auto p : patterns_of_width(columns.size(), 1))
    report.sec_ok &= scan(columns, p, Constraint::Sec, seen, report.violations);
  return report;
}

ConstraintReport check_daec(std::span<const BitVec> columns) {
  ConstraintReport report;
  SyndromeIndex seen;
  // Singles are indexed without judging them; that is check_sec's job.
  std::vector<Violation> ignored;
  for (auto p : patterns_of_width(columns.size(), 1))
    scan(columns, p, Constraint::Sec, seen, ignored);
  for (auto p : patterns_of_width(columns.size(), 2))
    report.daec_ok &= scan(columns, p, Constraint::Daec, seen, report.violations);
  return report;
}

ConstraintReport check_taec(std::span<const BitVec> columns) {
  ConstraintReport report;
  SyndromeIndex seen;
  for (std::size_t width = 1; width <= 3; ++width)
    for (auto p : patterns_of_width(columns.size(), width))
      report.taec_ok &= scan(columns, p, Constraint::Taec, seen, report.violations);

  std::unordered_set<BitVec, BitVecHash> singles(columns.begin(), columns.end());
  for (auto p : patterns_of_width(columns.size(), 3)) {
    const BitVec s = pattern_syndrome(columns, p);
    if (s.none() || singles.contains(s)) report.literal_taec_ok = false;
  }
  return report;
}

ConstraintReport check_all(std::span<const BitVec> columns) {
  ConstraintReport report = check_sec(columns);
  ConstraintReport daec = check_daec(columns);
  ConstraintReport taec = check_taec(columns);
  report.daec_ok = daec.daec_ok;
  report.taec_ok = taec.taec_ok;
  report.literal_taec_ok = taec.literal_taec_ok;
  report.violations.insert(report.violations.end(), daec.violations.begin(), daec.violations.end());
  report.violations.insert(report.violations.end(), taec.violations.begin(), taec.violations.end());
  return report;
}

void require_capability(const CheckMatrix& h, Capability capability) {
  ConstraintReport report = check_all(h);
  if (!report.satisfies(capability))
    throw rejected_code("matrix does not satisfy " + std::string(to_token(capability)), std::move(report));
}

} // namespace adjecc
