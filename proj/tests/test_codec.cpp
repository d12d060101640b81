#include <doctest.h>

#include <stdexcept>

#include "adjecc/codec.hpp"
#include "adjecc/random.hpp"
#include "adjecc/search.hpp"
#include "support.hpp"

using namespace adjecc;

TEST_CASE("encode golden values") {
  const CodeSpec spec = builtin_2316();
  CHECK(encode(spec, test::ones(16)).to_string() == test::all_ones_codeword);
  CHECK(encode_parity(spec, test::ones(16)).to_string() == "0100010");
  CHECK(encode(spec, BitVec(16)).none());
  CHECK(encode(spec, BitVec::unit(16, 1)).to_string() == "01100000000001000010000");
  CHECK_THROWS_AS(encode(spec, BitVec(17)), std::invalid_argument);
}

TEST_CASE("syndrome golden values") {
  const CodeSpec spec = builtin_2316();
  CHECK(compute_syndrome(spec, BitVec::from_string(test::all_ones_codeword)).to_string() == "0000000");
  CHECK(compute_syndrome(spec, BitVec::from_string(test::corrupted_codeword)).to_string() == "1011101");
  auto word = BitVec::from_string(test::all_ones_codeword);
  word.flip(1);
  CHECK(compute_syndrome(spec, word).to_string() == "0001000");
  CHECK_THROWS_AS(compute_syndrome(spec, BitVec(7)), std::invalid_argument);
}

TEST_CASE("decode the corrupted worked example") {
  const auto out = decode(builtin_2316(), BitVec::from_string(test::corrupted_codeword));
  CHECK(out.kind == DecodeKind::Corrected);
  REQUIRE(out.error_span);
  CHECK(*out.error_span == ErrorPattern{4, 3});
  CHECK(out.message == test::ones(16));
  CHECK(out.syndrome.to_string() == "1011101");
}

TEST_CASE("clean and non-adjacent double outcomes") {
  const CodeSpec spec = builtin_2316();
  const SyndromeDecoder dec(spec);
  CHECK(dec.table_size() == 66);
  const auto clean = dec.decode(BitVec::from_string(test::all_ones_codeword));
  CHECK(clean.kind == DecodeKind::Clean);
  CHECK_FALSE(clean.error_span);
  CHECK(clean.syndrome.none());

  auto word = BitVec::from_string(test::all_ones_codeword);
  word.flip(2);
  word.flip(7);
  const auto a = dec.decode(word), b = dec.decode(word);
  CHECK(a == b);
  CHECK(a.syndrome.any());
  CHECK((a.kind == DecodeKind::Corrected) == a.error_span.has_value());
  if (a.kind == DecodeKind::DetectedUncorrectable) CHECK(a.message == disassemble(spec, word).info);
}

TEST_CASE("round trip is exhaustive for k = 16") {
  const SyndromeDecoder dec(builtin_2316());
  std::size_t bad = 0;
  for (std::uint64_t m = 0; m < (1u << 16); ++m) {
    const BitVec msg = BitVec::from_integer(16, m);
    const auto out = dec.decode(encode(dec.spec(), msg));
    bad += out.kind != DecodeKind::Clean || out.message != msg;
  }
  CHECK(bad == 0);
}

TEST_CASE("every correctable burst is corrected with the exact span") {
  const CodeSpec spec = builtin_2316();
  const SyndromeDecoder dec(spec);
  Rng rng(41);
  const auto patterns = correctable_patterns(spec.n(), spec.capability());
  std::size_t bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const BitVec m = rng.bits(16);
    const BitVec c = encode(spec, m);
    for (const auto& p : patterns) {
      const auto out = dec.decode(c ^ pattern_vector(spec.n(), p));
      bad += out.kind != DecodeKind::Corrected || out.message != m || !out.error_span || *out.error_span != p;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("searched codes round trip and correct bursts") {
  for (std::size_t k : {32u, 64u}) {
    SearchConfig cfg;
    cfg.k = k;
    cfg.n = k + default_check_bits(k, Capability::SecDaecTaec);
    const auto res = search(cfg);
    REQUIRE(res.code);
    const SyndromeDecoder dec(*res.code);
    Rng rng(k);
    std::size_t bad = 0;
    for (int t = 0; t < 2000; ++t) {
      const BitVec m = rng.bits(k);
      const BitVec c = encode(dec.spec(), m);
      CHECK(mat_vec_mul(dec.spec().matrix(), c).none());
      const auto clean = dec.decode(c);
      bad += clean.kind != DecodeKind::Clean || clean.message != m;
      const ErrorPattern p{1 + rng.uniform_below(cfg.n - 2), 1 + rng.uniform_below(3)};
      const auto fixed = dec.decode(c ^ pattern_vector(cfg.n, p));
      bad += fixed.kind != DecodeKind::Corrected || fixed.message != m || *fixed.error_span != p;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("capability limits the correction table") {
  const CodeSpec sec = verify_and_wrap(test::hamming74(), Capability::Sec);
  const SyndromeDecoder dec(sec);
  CHECK(dec.table_size() == 7);
  // Hamming SEC cannot host the adjacent-pair table.
  CHECK_THROWS(SyndromeDecoder(CodeSpec("h", sec.matrix(), sec.layout(), Capability::SecDaec)));
  CHECK_NOTHROW(SyndromeDecoder(CodeSpec("h", sec.matrix(), sec.layout(), Capability::SecDaec),
                                TableConflicts::KeepFirst));
}

TEST_CASE("encoding is linear") {
  const CodeSpec spec = builtin_2316();
  Rng rng(43);
  for (int t = 0; t < 500; ++t) {
    const BitVec a = rng.bits(16), b = rng.bits(16);
    CHECK(encode(spec, a ^ b) == (encode(spec, a) ^ encode(spec, b)));
  }
}
