#include <doctest.h>

#include <map>
#include <set>

#include "adjecc/constraints.hpp"
#include "adjecc/random.hpp"
#include "support.hpp"

using namespace adjecc;

namespace {

// Plain column lists: the checkers accept shapes a CheckMatrix would refuse (r >= n).
std::vector<BitVec> cols_of(const std::vector<std::string>& cols) {
  std::vector<BitVec> v;
  for (const auto& c : cols) v.push_back(BitVec::from_string(c));
  return v;
}

CheckMatrix from_column_strings(const std::vector<std::string>& cols) { return CheckMatrix::from_columns(cols_of(cols)); }

// Independent oracle: enumerate bursts up to `width`, syndrome via mat_vec_mul.
bool injective_up_to(const CheckMatrix& h, std::size_t width) {
  std::set<std::string> seen;
  const std::size_t n = h.cols();
  for (std::size_t w = 1; w <= width; ++w)
    for (std::size_t s = 1; s + w - 1 <= n; ++s) {
      BitVec e(n);
      for (std::size_t p = s; p < s + w; ++p) e.set(p);
      const BitVec syn = mat_vec_mul(h, e);
      if (syn.none() || !seen.insert(syn.to_string()).second) return false;
    }
  return true;
}

} // namespace

TEST_CASE("builtin matrix passes every constraint") {
  const auto h = test::builtin_matrix();
  CHECK(check_sec(h).sec_ok);
  CHECK(check_daec(h).daec_ok);
  const auto taec = check_taec(h);
  CHECK(taec.taec_ok);
  CHECK(taec.violations.empty());
  const auto all = check_all(h);
  CHECK(all.satisfies(Capability::SecDaecTaec));
  CHECK(all.literal_taec_ok);

  std::set<std::string> syndromes;
  for (const auto& p : correctable_patterns(23, Capability::SecDaecTaec)) {
    const BitVec s = mat_vec_mul(h, pattern_vector(23, p));
    CHECK(s.any());
    syndromes.insert(s.to_string());
  }
  CHECK(syndromes.size() == 66);
}

TEST_CASE("sec witnesses") {
  const auto zero = check_sec(cols_of({"011", "000", "101"}));
  CHECK_FALSE(zero.sec_ok);
  REQUIRE(zero.first_violation(Constraint::Sec));
  CHECK(zero.first_violation(Constraint::Sec)->first == ErrorPattern{2, 1});
  CHECK_FALSE(zero.first_violation(Constraint::Sec)->second);

  const auto dup = check_sec(from_column_strings({"011", "110", "101", "110"}));
  CHECK_FALSE(dup.sec_ok);
  const auto* v = dup.first_violation(Constraint::Sec);
  REQUIRE(v);
  CHECK(v->first == ErrorPattern{2, 1});
  REQUIRE(v->second);
  CHECK(*v->second == ErrorPattern{4, 1});
  CHECK(v->syndrome.to_string() == "110");
}

TEST_CASE("hamming 7,4 is SEC but not DAEC") {
  const auto h = test::hamming74();
  CHECK(check_sec(h).sec_ok);
  const auto daec = check_daec(h);
  CHECK_FALSE(daec.daec_ok);
  const auto* v = daec.first_violation(Constraint::Daec);
  REQUIRE(v);
  // columns 1 ^ 2 == column 3
  CHECK(v->first == ErrorPattern{3, 1});
  REQUIRE(v->second);
  CHECK(*v->second == ErrorPattern{1, 2});
}

TEST_CASE("empty quantification cases") {
  CHECK(check_daec(std::vector<BitVec>{BitVec::from_string("1")}).daec_ok);
  CHECK(check_taec(cols_of({"01", "10"})).taec_ok);
  CHECK(check_taec(cols_of({"011", "110"})).taec_ok);
}

TEST_CASE("triple sum equal to a pair sum is a taec violation") {
  // columns a b c d with a^b^c == c^d  <=> d == a^b
  const auto h = from_column_strings({"0001", "0010", "0100", "0011", "1000"});
  CHECK(check_sec(h).sec_ok);
  const auto taec = check_taec(h);
  CHECK_FALSE(taec.taec_ok);
  const auto* v = taec.first_violation(Constraint::Taec);
  REQUIRE(v);
  REQUIRE(v->second);
  CHECK(pattern_syndrome(h.columns(), v->first) == pattern_syndrome(h.columns(), *v->second));
  CHECK(v->syndrome == pattern_syndrome(h.columns(), v->first));
}

TEST_CASE("checker agrees with brute-force oracle on random small matrices") {
  Rng rng(2024);
  int rejected[3] = {0, 0, 0};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(11);
    const std::size_t r = 1 + rng.uniform_below(std::min<std::size_t>(n - 1, 6));
    std::vector<BitVec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(rng.bits(r));
    const auto h = CheckMatrix::from_columns(cols);
    const auto report = check_all(h);

    const bool o1 = injective_up_to(h, 1), o2 = injective_up_to(h, 2), o3 = injective_up_to(h, 3);
    CHECK(report.satisfies(Capability::Sec) == o1);
    CHECK(report.satisfies(Capability::SecDaec) == o2);
    CHECK(report.satisfies(Capability::SecDaecTaec) == o3);
    CHECK(check_sec(h).sec_ok == o1);
    CHECK(check_taec(h).taec_ok == o3);
    rejected[0] += !o1;
    rejected[1] += !o2;
    rejected[2] += !o3;

    for (const auto& v : report.violations) {
      if (v.second)
        CHECK(pattern_syndrome(h.columns(), v.first) == pattern_syndrome(h.columns(), *v.second));
      else
        CHECK(pattern_syndrome(h.columns(), v.first).none());
    }
  }
  // Both outcomes must actually occur for the comparison to mean anything.
  CHECK(rejected[0] > 0);
  CHECK(rejected[2] < 1000);
}

TEST_CASE("require_capability carries the report") {
  try {
    require_capability(test::hamming74(), Capability::SecDaec);
    FAIL("expected rejection");
  } catch (const rejected_code& e) {
    CHECK_FALSE(e.report().daec_ok);
  }
  CHECK_NOTHROW(require_capability(test::builtin_matrix(), Capability::SecDaecTaec));
}
