#include "adjecc/search.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>

#include "adjecc/constraints.hpp"
#include "adjecc/errors.hpp"
#include "adjecc/random.hpp"

namespace adjecc {

namespace {

// Column value encoding used inside the search: row 1 is the most
// significant of r bits.
BitVec column_vector(std::size_t rows, std::uint32_t value) {
  return BitVec::from_integer(rows, value);
}

std::uint32_t column_value(const BitVec& column) {
  return static_cast<std::uint32_t>(column.to_integer());
}

std::size_t required_syndromes(std::size_t n, Capability capability) {
  std::size_t total = 0;
  for (std::size_t width = 1; width <= max_burst(capability); ++width)
    if (n >= width) total += n - width + 1;
  return total;
}

std::vector<std::uint32_t> candidate_order(std::size_t rows, const SearchConfig& config) {
  const std::uint32_t count = (std::uint32_t{1} << rows) - 1;
  std::vector<std::uint32_t> values(count);
  for (std::uint32_t v = 1; v <= count; ++v) values[v - 1] = v;

  if (config.column_order == ColumnOrder::Lexicographic) {
    std::stable_partition(values.begin(), values.end(),
                          [](std::uint32_t v) { return std::popcount(v) % 2 == 1; });
  } else {
    Rng rng(config.seed);
    for (std::size_t i = values.size(); i > 1; --i)
      std::swap(values[i - 1], values[rng.uniform_below(i)]);
  }
  return values;
}

} // namespace

std::size_t default_check_bits(std::size_t k, Capability capability) {
  switch (k) {
  case 16: return 7;
  case 32: return 8;
  case 64: return 10;
  default: break;
  }
  std::size_t r = 1;
  while (r < 64 && required_syndromes(k + r, capability) > (std::uint64_t{1} << r) - 1) ++r;
  return r;
}

PrefixState::PrefixState(std::size_t rows, Capability capability)
    : rows_(rows), capability_(capability) {
  if (rows == 0 || rows > max_search_rows)
    throw argument_error("search supports 1.." + std::to_string(max_search_rows) + " check rows");
  used_.assign(std::size_t{1} << rows, 0);
}

std::vector<std::uint32_t> PrefixState::new_syndromes(std::uint32_t value) const {
  std::vector<std::uint32_t> out{value};
  const std::size_t m = columns_.size();
  const std::size_t burst = max_burst(capability_);
  if (burst >= 2 && m >= 1) out.push_back(value ^ columns_[m - 1]);
  if (burst >= 3 && m >= 2) out.push_back(value ^ columns_[m - 1] ^ columns_[m - 2]);
  return out;
}

bool PrefixState::try_push(const BitVec& column) {
  if (column.size() != rows_) throw argument_error("column height does not match search rows");
  return try_push_value(column_value(column));
}

bool PrefixState::try_push_value(std::uint32_t value) {
  auto added = new_syndromes(value);
  for (std::size_t i = 0; i < added.size(); ++i) {
    if (added[i] == 0 || used_[added[i]]) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (added[i] == added[j]) return false;
  }
  for (auto s : added) used_[s] = 1;
  columns_.push_back(value);
  added_.push_back(std::move(added));
  return true;
}

void PrefixState::pop() {
  if (columns_.empty()) throw argument_error("pop on empty prefix");
  for (auto s : added_.back()) used_[s] = 0;
  added_.pop_back();
  columns_.pop_back();
}

std::vector<BitVec> PrefixState::columns() const {
  std::vector<BitVec> out;
  out.reserve(columns_.size());
  for (auto v : columns_) out.push_back(column_vector(rows_, v));
  return out;
}

SearchResult search(const SearchConfig& config) {
  const std::size_t n = config.n, k = config.k;
  if (n == 0 || n > BitVec::max_size) throw argument_error("search needs 1 <= n <= 128");
  if (k == 0 || k >= n) throw argument_error("search needs 0 < k < n");
  const std::size_t r = n - k;
  if (r > max_search_rows)
    throw argument_error("search supports at most " + std::to_string(max_search_rows) + " check rows");

  SearchResult result;
  if (required_syndromes(n, config.capability) > (std::size_t{1} << r) - 1) return result;

  const auto candidates = candidate_order(r, config);
  PrefixState state(r, config.capability);
  std::vector<std::size_t> next(n + 1, 0);
  std::vector<char> unit_at(n, 0);
  std::size_t units_used = 0;
  std::vector<std::uint32_t> unit_values;
  for (std::size_t b = 0; b < r; ++b) unit_values.push_back(std::uint32_t{1} << b);
  std::vector<char> placed(std::size_t{1} << r, 0);

  while (state.size() < n) {
    const std::size_t pos = state.size();
    const std::size_t remaining = n - pos;
    const bool units_only = (r - units_used) == remaining;
    bool pushed = false;
    for (std::size_t i = next[pos]; i < candidates.size(); ++i) {
      const std::uint32_t v = candidates[i];
      const bool unit = std::has_single_bit(v);
      if (units_only && !unit) continue;
      if (state.try_push_value(v)) {
        // A unit value whose syndrome is already claimed can never be placed,
        // and every unit must appear.
        const bool dead = std::any_of(unit_values.begin(), unit_values.end(), [&](std::uint32_t u) {
          return u != v && !placed[u] && state.taken(u);
        });
        if (dead) {
          state.pop();
          continue;
        }
        if (unit) placed[v] = 1;
        next[pos] = i + 1;
        next[pos + 1] = 0;
        unit_at[pos] = unit;
        units_used += unit ? 1 : 0;
        pushed = true;
        break;
      }
    }
    if (pushed) continue;

    if (pos == 0) return result;
    if (++result.backtracks > config.max_backtracks) {
      result.status = SearchStatus::BudgetExhausted;
      return result;
    }
    if (unit_at[pos - 1]) {
      --units_used;
      placed[state.last()] = 0;
    }
    state.pop();
  }

  const auto columns = state.columns();
  const CheckMatrix h = CheckMatrix::from_columns(columns);
  require_capability(h, config.capability);

  std::vector<BitRole> layout;
  std::size_t info = 0, parity = 0;
  for (const auto& column : columns)
    layout.push_back(column.count() == 1 ? BitRole{BitRole::Kind::Parity, ++parity}
                                         : BitRole{BitRole::Kind::Info, ++info});
  std::string name = "search_" + std::to_string(n) + "_" + std::to_string(k) + "_" +
                     std::string(to_token(config.capability));
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  result.status = SearchStatus::Found;
  result.code.emplace(std::move(name), h, std::move(layout), config.capability);
  return result;
}

CodeSpec verify_and_wrap(const CheckMatrix& h, Capability capability, std::string name) {
  require_capability(h, capability);

  const std::size_t n = h.cols(), r = h.rows();
  std::vector<bool> pivot(n + 1, false);
  // Reduced basis keyed by leading position.
  std::vector<std::optional<BitVec>> basis(r + 1);
  std::size_t rank = 0;
  auto insert = [&](BitVec v) {
    for (std::size_t i = 1; i <= r; ++i) {
      if (!v.test(i)) continue;
      if (!basis[i]) {
        basis[i] = v;
        ++rank;
        return true;
      }
      v ^= *basis[i];
    }
    return false;
  };

  for (std::size_t row = 1; row <= r; ++row) {
    const BitVec unit = BitVec::unit(r, row);
    for (std::size_t j = 1; j <= n; ++j)
      if (h.column(j) == unit) {
        insert(unit);
        pivot[j] = true;
        break;
      }
  }
  for (std::size_t j = 1; j <= n && rank < r; ++j)
    if (!pivot[j] && insert(h.column(j))) pivot[j] = true;
  if (rank < r) throw argument_error("matrix rank is below its row count; no parity positions exist");

  std::vector<BitRole> layout;
  std::size_t info = 0, parity = 0;
  for (std::size_t j = 1; j <= n; ++j)
    layout.push_back(pivot[j] ? BitRole{BitRole::Kind::Parity, ++parity}
                              : BitRole{BitRole::Kind::Info, ++info});
  return CodeSpec(std::move(name), h, std::move(layout), capability);
}

} // namespace adjecc
