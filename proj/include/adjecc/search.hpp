#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adjecc/bitvec.hpp"
#include "adjecc/check_matrix.hpp"
#include "adjecc/code_spec.hpp"

namespace adjecc {

enum class ColumnOrder {
  /// Odd-weight columns first, each group ascending (row 1 most significant).
  Lexicographic,
  /// Seeded Fisher-Yates shuffle of all non-zero columns.
  Randomized,
};

struct SearchConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  Capability capability = Capability::SecDaecTaec;
  std::uint64_t seed = 1;
  std::uint64_t max_backtracks = 10'000'000;
  ColumnOrder column_order = ColumnOrder::Lexicographic;
};

enum class SearchStatus { Found, Infeasible, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<CodeSpec> code;
  std::uint64_t backtracks = 0;
};

/// Largest check count the search enumerates columns for.
inline constexpr std::size_t max_search_rows = 16;

/// Check count the CLI uses for a data width: 7 for 16 bits, 8 for 32,
/// 10 for 64; other widths get the smallest r whose syndrome space can hold
/// every correctable pattern of the requested capability.
std::size_t default_check_bits(std::size_t k, Capability capability);

/// Depth-first column-by-column construction of an H-matrix with all r unit
/// columns present (they host the parity bits). The result is deterministic
/// for a given config and is re-validated with the full constraint checker
/// before it is returned.
///
/// Infeasible means the whole space of such matrices was exhausted (or a
/// counting bound rules it out up front). Throws argument_error for
/// unusable parameters (k == 0, k >= n, n > 128, r > max_search_rows).
SearchResult search(const SearchConfig& config);

/// Incremental constraint state over a column prefix, as used by search.
///
/// try_push accepts a column only if the prefix stays free of zero or
/// colliding syndromes for the capability's correctable patterns.
class PrefixState {
public:
  PrefixState(std::size_t rows, Capability capability);

  bool try_push(const BitVec& column);
  /// Same as try_push for a column encoded with row 1 as the top bit.
  bool try_push_value(std::uint32_t value);
  void pop();

  std::size_t size() const noexcept { return columns_.size(); }
  /// Whether some committed pattern already produces this syndrome value.
  std::uint32_t last() const { return columns_.back(); }
  bool taken(std::uint32_t syndrome) const { return used_.at(syndrome) != 0; }
  std::vector<BitVec> columns() const;

private:
  std::vector<std::uint32_t> new_syndromes(std::uint32_t value) const;

  std::size_t rows_;
  Capability capability_;
  std::vector<std::uint32_t> columns_;
  std::vector<std::vector<std::uint32_t>> added_;
  std::vector<std::uint8_t> used_;
};

/// Wraps an externally supplied matrix into a CodeSpec.
///
/// Parity positions are chosen as unit columns first (leftmost per row),
/// then the leftmost columns that raise the rank until it reaches r; info
/// bits fill the remaining positions in ascending order. Throws
/// rejected_code when the matrix fails `capability`, argument_error when
/// H has rank below r.
CodeSpec verify_and_wrap(const CheckMatrix& h, Capability capability, std::string name = "wrapped");

} // namespace adjecc
