#include <doctest.h>

#include <stdexcept>

#include "adjecc/code_spec.hpp"
#include "adjecc/codec.hpp"
#include "adjecc/errors.hpp"
#include "adjecc/random.hpp"
#include "support.hpp"

using namespace adjecc;

TEST_CASE("builtin layout") {
  const CodeSpec spec = builtin_2316();
  CHECK(spec.n() == 23);
  CHECK(spec.k() == 16);
  CHECK(spec.r() == 7);
  CHECK(spec.capability() == Capability::SecDaecTaec);
  CHECK(spec.matrix() == test::builtin_matrix());
  std::string roles;
  for (const auto& role : spec.layout()) roles += to_token(role) + " ";
  CHECK(roles == "P1 I1 P2 I2 I3 I4 I5 I6 P3 I7 I8 I9 I10 P4 I11 I12 I13 P5 P6 P7 I14 I15 I16 ");
  // i2..i4 sit at printed positions 4..6.
  CHECK(spec.info_position(2) == 4);
  CHECK(spec.info_position(3) == 5);
  CHECK(spec.info_position(4) == 6);
}

TEST_CASE("assemble oracles") {
  const CodeSpec spec = builtin_2316();
  CHECK(assemble(spec, test::ones(16), BitVec::from_string("0100010")).to_string() == test::all_ones_codeword);
  CHECK(assemble(spec, BitVec(16), BitVec(7)).none());
  CHECK(assemble(spec, BitVec::unit(16, 1), BitVec::from_string("0101010")).to_string() ==
        "01100000000001000010000");
  CHECK_THROWS_AS(assemble(spec, BitVec(15), BitVec(7)), std::invalid_argument);
}

TEST_CASE("disassemble oracles") {
  const CodeSpec spec = builtin_2316();
  const auto split = disassemble(spec, BitVec::from_string(test::all_ones_codeword));
  CHECK(split.info == test::ones(16));
  CHECK(split.parity.to_string() == "0100010");
  const auto zero = disassemble(spec, BitVec(23));
  CHECK(zero.info.none());
  CHECK(zero.parity.none());
  CHECK_THROWS_AS(disassemble(spec, BitVec(24)), std::invalid_argument);
}

TEST_CASE("disassemble inverts assemble") {
  const CodeSpec spec = builtin_2316();
  Rng rng(17);
  for (int t = 0; t < 1000; ++t) {
    const BitVec info = rng.bits(16), parity = rng.bits(7);
    const auto split = disassemble(spec, assemble(spec, info, parity));
    CHECK(split.info == info);
    CHECK(split.parity == parity);
  }
}

TEST_CASE("builtin codewords satisfy H") {
  const CodeSpec spec = builtin_2316();
  for (std::size_t j = 1; j <= 16; ++j) {
    const BitVec m = BitVec::unit(16, j);
    CHECK(mat_vec_mul(spec.matrix(), assemble(spec, m, encode_parity(spec, m))).none());
  }
  Rng rng(23);
  for (int t = 0; t < 1000; ++t) {
    const BitVec m = rng.bits(16);
    CHECK(mat_vec_mul(spec.matrix(), assemble(spec, m, encode_parity(spec, m))).none());
  }
}

TEST_CASE("shared equations agree with solving H") {
  const CodeSpec spec = builtin_2316();
  Rng rng(29);
  for (int t = 0; t < 1000; ++t) {
    const BitVec m = rng.bits(16);
    CHECK(encode_parity_shared_2316(m) == solve_parity(spec, m));
  }
  CHECK(builtin_2316_shared_equations().size() == 7);
}

TEST_CASE("layout must be a bijection with independent parity columns") {
  const auto h = test::builtin_matrix();
  auto dup = builtin_2316().layout();
  dup[1] = dup[3];
  CHECK_THROWS_AS(CodeSpec("x", h, dup, Capability::SecDaecTaec), std::invalid_argument);
  auto short_layout = builtin_2316().layout();
  short_layout.pop_back();
  CHECK_THROWS_AS(CodeSpec("x", h, short_layout, Capability::SecDaecTaec), std::invalid_argument);

  // Parity on columns 1 and 3 of a matrix whose columns 1 and 3 are equal.
  const CheckMatrix toy({BitVec::from_string("1010"), BitVec::from_string("0101")});
  const std::vector<BitRole> dependent = {{BitRole::Kind::Parity, 1}, {BitRole::Kind::Info, 1},
                                          {BitRole::Kind::Parity, 2}, {BitRole::Kind::Info, 2}};
  CHECK_THROWS_AS(CodeSpec("x", toy, dependent, Capability::Sec), std::invalid_argument);
  const std::vector<BitRole> fine = {{BitRole::Kind::Parity, 1}, {BitRole::Kind::Parity, 2},
                                     {BitRole::Kind::Info, 1}, {BitRole::Kind::Info, 2}};
  const CodeSpec ok("x", toy, fine, Capability::Sec);
  CHECK(encode(ok, BitVec::from_string("11")).to_string() == "1111");
}

TEST_CASE("code file round trip") {
  const CodeSpec spec = builtin_2316();
  const std::string text = render_code_spec(spec);
  const CodeSpec back = parse_code_spec(text, spec.name());
  CHECK(back == spec);
  CHECK(render_code_spec(back) == text);
}

TEST_CASE("code file parse errors") {
  CHECK_THROWS_AS(parse_code_spec("3 1\n110\n011\n", "x"), parse_error);
  CHECK_THROWS_AS(parse_code_file("3 1\n110\n011\nlayout: P1 I1\n"), std::exception);
  CHECK_THROWS_AS(parse_code_file("3 1\n110\n011\ncapability: quad\n"), std::exception);
  const CodeFile bare = parse_code_file("3 1\n110\n011\n");
  CHECK_FALSE(bare.layout);
  CHECK_FALSE(bare.capability);
}

TEST_CASE("capability tokens") {
  for (auto cap : {Capability::Sec, Capability::SecDaec, Capability::SecDaecTaec})
    CHECK(capability_from_token(to_token(cap)) == cap);
  CHECK(capability_from_token("taec") == Capability::SecDaecTaec);
  CHECK(capability_from_token("daec") == Capability::SecDaec);
  CHECK(capability_from_token("sec") == Capability::Sec);
  CHECK_THROWS(capability_from_token("ded"));
}

TEST_CASE("correctable pattern enumeration order and counts") {
  const auto p = correctable_patterns(23, Capability::SecDaecTaec);
  CHECK(p.size() == 66);
  CHECK(p.front() == ErrorPattern{1, 1});
  CHECK(p[23] == ErrorPattern{1, 2});
  CHECK(p.back() == ErrorPattern{21, 3});
  CHECK(correctable_patterns(2, Capability::SecDaecTaec).size() == 3);
  CHECK(correctable_patterns(7, Capability::Sec).size() == 7);
  CHECK(pattern_vector(6, {2, 3}).to_string() == "011100");
}
