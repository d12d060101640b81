#include <doctest.h>

#include <stdexcept>

#include "adjecc/bitvec.hpp"
#include "adjecc/check_matrix.hpp"
#include "adjecc/errors.hpp"
#include "adjecc/random.hpp"
#include "support.hpp"

using namespace adjecc;

TEST_CASE("bitvec xor identities") {
  const auto a = BitVec::from_string("1011");
  CHECK((a ^ BitVec::from_string("0000")).to_string() == "1011");
  CHECK((a ^ a).to_string() == "0000");
  CHECK_THROWS_AS(a ^ BitVec(5), std::invalid_argument);
}

TEST_CASE("bitvec positions are 1-based with position 1 printed first") {
  auto v = BitVec::from_string("1000000000000000000000000000000000000000000000000000000000000000001");
  CHECK(v.size() == 67);
  CHECK(v.test(1));
  CHECK(v.test(67));
  CHECK(v.count() == 2);
  v.flip(67);
  CHECK(v.count() == 1);
  CHECK(BitVec::unit(4, 2).to_string() == "0100");
  CHECK(BitVec::from_integer(4, 1).to_string() == "0001");
  CHECK(BitVec::from_integer(7, 93).to_integer() == 93);
  CHECK_THROWS(BitVec(129));
  CHECK_THROWS(BitVec::from_string("10x1"));
  CHECK_THROWS(v.test(0));
  CHECK_THROWS(v.test(68));
}

TEST_CASE("bitvec string round trip across the word boundary") {
  Rng rng(3);
  for (std::size_t len : {1u, 63u, 64u, 65u, 127u, 128u}) {
    for (int t = 0; t < 50; ++t) {
      const BitVec v = rng.bits(len);
      CHECK(BitVec::from_string(v.to_string()) == v);
    }
  }
}

TEST_CASE("builtin matrix column sum for positions 4,5,6") {
  const auto h = test::builtin_matrix();
  CHECK((h.column(4) ^ h.column(5) ^ h.column(6)).to_string() == "1011101");
}

TEST_CASE("mat_vec_mul oracles") {
  const auto h = test::builtin_matrix();
  CHECK(mat_vec_mul(h, BitVec::from_string(test::all_ones_codeword)).to_string() == "0000000");
  CHECK(mat_vec_mul(h, BitVec(23)).to_string() == "0000000");
  CHECK(mat_vec_mul(h, BitVec::from_string(test::corrupted_codeword)).to_string() == "1011101");
  CHECK_THROWS_AS(mat_vec_mul(h, BitVec(22)), std::invalid_argument);
}

TEST_CASE("mat_vec_mul is linear and maps unit vectors to columns") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.uniform_below(127);
    const std::size_t r = 1 + rng.uniform_below(std::min<std::size_t>(n - 1, 16));
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(rng.bits(n));
    const CheckMatrix h(rows);
    const BitVec a = rng.bits(n), b = rng.bits(n);
    CHECK(mat_vec_mul(h, a ^ b) == (mat_vec_mul(h, a) ^ mat_vec_mul(h, b)));
    const std::size_t j = 1 + rng.uniform_below(n);
    CHECK(mat_vec_mul(h, BitVec::unit(n, j)) == h.column(j));
  }
}

TEST_CASE("parse_matrix reads the header and rows") {
  std::string text = "23 16\n";
  for (const auto& r : test::builtin_rows) text += r + "\n";
  const auto h = parse_matrix(text);
  CHECK(h.rows() == 7);
  CHECK(h.cols() == 23);
  CHECK(h.column(1).to_string() == "0001000");
  CHECK(h == test::builtin_matrix());

  const auto small = parse_matrix("# toy\n3 1\n110\n\n011\n");
  CHECK(small.rows() == 2);
  CHECK(small.cols() == 3);
}

TEST_CASE("parse_matrix errors carry the line number") {
  std::string text = "23 16\n";
  for (std::size_t i = 0; i < test::builtin_rows.size(); ++i)
    text += (i == 2 ? test::builtin_rows[i].substr(1) : test::builtin_rows[i]) + "\n";
  try {
    parse_matrix(text);
    FAIL("expected parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_matrix("3 1\n1a0\n011\n"), parse_error);
  CHECK_THROWS_AS(parse_matrix("3 3\n"), parse_error);
  CHECK_THROWS_AS(parse_matrix("3 1\n110\n"), parse_error);
  CHECK_THROWS_AS(parse_matrix("3 1\n110\n011\n111\n"), parse_error);
}

TEST_CASE("matrix render/parse round trip") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.uniform_below(127);
    const std::size_t r = 1 + rng.uniform_below(n - 1);
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(rng.bits(n));
    const CheckMatrix h(rows);
    CHECK(parse_matrix(render_matrix(h)) == h);
  }
}

TEST_CASE("check matrix shape validation") {
  CHECK_THROWS(CheckMatrix({BitVec::from_string("101"), BitVec::from_string("10")}));
  CHECK_THROWS(CheckMatrix({BitVec::from_string("1"), BitVec::from_string("0")}));
}
