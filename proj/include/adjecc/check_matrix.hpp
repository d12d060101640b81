#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjecc/bitvec.hpp"

namespace adjecc {

/// Dense r x n parity-check matrix over GF(2), r < n <= 128.
///
/// Rows and columns are addressed 1-based. Row i is syndrome bit i, and
/// column j read top to bottom is the syndrome of a single error at
/// codeword position j.
class CheckMatrix {
public:
  explicit CheckMatrix(std::vector<BitVec> rows);

  static CheckMatrix from_columns(std::span<const BitVec> columns);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return columns_.size(); }

  const BitVec& row(std::size_t i) const;
  const BitVec& column(std::size_t j) const;

  std::span<const BitVec> row_span() const noexcept { return rows_; }
  std::span<const BitVec> columns() const noexcept { return columns_; }

  friend bool operator==(const CheckMatrix& a, const CheckMatrix& b) { return a.rows_ == b.rows_; }

private:
  std::vector<BitVec> rows_;
  std::vector<BitVec> columns_;
};

/// H * c^T: bit i of the result is the parity of c restricted to row i.
BitVec mat_vec_mul(const CheckMatrix& h, const BitVec& c);

/// Matrix text format: "n k" header, then n-k rows of n binary digits.
/// Spaces between digits, blank lines and '#' comment lines are tolerated.
CheckMatrix parse_matrix(std::string_view text);

/// Renders the header and rows without separators; parse_matrix inverts it.
std::string render_matrix(const CheckMatrix& h);

namespace detail {

struct TextLine {
  std::size_t number;
  std::string_view text;
};

/// Splits into lines, dropping blank and comment lines and trailing '\r'.
std::vector<TextLine> content_lines(std::string_view text);

/// Consumes the header and matrix rows starting at `cursor`.
CheckMatrix parse_matrix_block(std::span<const TextLine> lines, std::size_t& cursor);

} // namespace detail

} // namespace adjecc
