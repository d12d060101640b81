#pragma once

#include <string>
#include <vector>

#include "adjecc/check_matrix.hpp"
#include "adjecc/code_spec.hpp"

namespace adjecc::test {

// Check matrix of the built-in (23,16) code, row 1 on top.
inline const std::vector<std::string> builtin_rows = {
    "00000101101010100000111", "01011010000001010000111", "01010000010110101010000",
    "10001000100010001000100", "01000100010001000100010", "00100010001000100010001",
    "00010001000100010001000",
};

inline CheckMatrix builtin_matrix() {
  std::vector<BitVec> rows;
  for (const auto& r : builtin_rows) rows.push_back(BitVec::from_string(r));
  return CheckMatrix(rows);
}

inline const std::string all_ones_codeword = "01111111011110111010111";
inline const std::string corrupted_codeword = "01100011011110111010111";

// Columns 1..7 in binary, row 1 most significant.
inline CheckMatrix hamming74() {
  return CheckMatrix({BitVec::from_string("0001111"), BitVec::from_string("0110011"),
                      BitVec::from_string("1010101")});
}

inline BitVec ones(std::size_t len) {
  BitVec v(len);
  for (std::size_t p = 1; p <= len; ++p) v.set(p);
  return v;
}

} // namespace adjecc::test
