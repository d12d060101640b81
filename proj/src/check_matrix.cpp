#include "adjecc/check_matrix.hpp"

#include <charconv>

#include "adjecc/errors.hpp"

namespace adjecc {

CheckMatrix::CheckMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw argument_error("check matrix needs at least one row");
  const std::size_t n = rows_.front().size();
  for (const auto& row : rows_)
    if (row.size() != n) throw argument_error("check matrix rows are ragged");
  if (rows_.size() >= n)
    throw argument_error("check matrix needs fewer rows than columns (r=" +
                         std::to_string(rows_.size()) + ", n=" + std::to_string(n) + ")");

  columns_.assign(n, BitVec(rows_.size()));
  for (std::size_t i = 1; i <= rows_.size(); ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (rows_[i - 1].test(j)) columns_[j - 1].set(i);
}

CheckMatrix CheckMatrix::from_columns(std::span<const BitVec> columns) {
  if (columns.empty()) throw argument_error("check matrix needs at least one column");
  const std::size_t r = columns.front().size();
  std::vector<BitVec> rows(r, BitVec(columns.size()));
  for (std::size_t j = 1; j <= columns.size(); ++j) {
    if (columns[j - 1].size() != r) throw argument_error("check matrix columns are ragged");
    for (std::size_t i = 1; i <= r; ++i)
      if (columns[j - 1].test(i)) rows[i - 1].set(j);
  }
  return CheckMatrix(std::move(rows));
}

const BitVec& CheckMatrix::row(std::size_t i) const {
  if (i == 0 || i > rows_.size()) throw argument_error("row index out of range");
  return rows_[i - 1];
}

const BitVec& CheckMatrix::column(std::size_t j) const {
  if (j == 0 || j > columns_.size()) throw argument_error("column index out of range");
  return columns_[j - 1];
}

BitVec mat_vec_mul(const CheckMatrix& h, const BitVec& c) {
  if (c.size() != h.cols())
    throw argument_error("word length " + std::to_string(c.size()) + " does not match " +
                         std::to_string(h.cols()) + " matrix columns");
  BitVec s(h.rows());
  for (std::size_t i = 1; i <= h.rows(); ++i)
    if (dot(h.row(i), c)) s.set(i);
  return s;
}

std::string render_matrix(const CheckMatrix& h) {
  std::string out = std::to_string(h.cols()) + " " + std::to_string(h.cols() - h.rows()) + "\n";
  for (const auto& row : h.row_span()) out += row.to_string() + "\n";
  return out;
}

namespace detail {

std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
    line.remove_prefix(lead);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

namespace {

std::size_t parse_count(const TextLine& line, std::string_view token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw parse_error(line.number, "expected a decimal count, got '" + std::string(token) + "'");
  return value;
}

} // namespace

CheckMatrix parse_matrix_block(std::span<const TextLine> lines, std::size_t& cursor) {
  if (cursor >= lines.size()) throw parse_error(0, "missing \"n k\" header");
  const TextLine& header = lines[cursor++];

  std::vector<std::string_view> tokens;
  for (std::size_t i = 0; i < header.text.size();) {
    while (i < header.text.size() && (header.text[i] == ' ' || header.text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < header.text.size() && header.text[j] != ' ' && header.text[j] != '\t') ++j;
    if (j > i) tokens.push_back(header.text.substr(i, j - i));
    i = j;
  }
  if (tokens.size() != 2) throw parse_error(header.number, "header must be \"n k\"");
  const std::size_t n = parse_count(header, tokens[0]);
  const std::size_t k = parse_count(header, tokens[1]);
  if (n == 0 || n > BitVec::max_size)
    throw parse_error(header.number, "code length n=" + std::to_string(n) + " outside 1..128");
  if (k == 0 || k >= n)
    throw parse_error(header.number, "need 0 < k < n (r = n - k must be at least 1 and below n)");
  const std::size_t r = n - k;

  std::vector<BitVec> rows;
  rows.reserve(r);
  while (rows.size() < r) {
    if (cursor >= lines.size())
      throw parse_error(0, "expected " + std::to_string(r) + " matrix rows, found " +
                               std::to_string(rows.size()));
    const TextLine& line = lines[cursor++];
    BitVec row(n);
    std::size_t width = 0;
    for (char ch : line.text) {
      if (ch == ' ' || ch == '\t') continue;
      if (ch != '0' && ch != '1')
        throw parse_error(line.number, "non-binary character '" + std::string(1, ch) + "'");
      ++width;
      if (width > n) break;
      if (ch == '1') row.set(width);
    }
    if (width != n)
      throw parse_error(line.number, "row has " + std::to_string(width) + " bits, expected " +
                                         std::to_string(n));
    rows.push_back(row);
  }
  return CheckMatrix(std::move(rows));
}

} // namespace detail

CheckMatrix parse_matrix(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::size_t cursor = 0;
  CheckMatrix h = detail::parse_matrix_block(lines, cursor);
  if (cursor != lines.size())
    throw parse_error(lines[cursor].number, "unexpected content after matrix rows");
  return h;
}

} // namespace adjecc
