#pragma once

#include <cstdint>
#include <random>

#include "adjecc/bitvec.hpp"

namespace adjecc {

/// Seeded generator whose output sequence is identical on every platform.
/// std::mt19937_64 is fully specified; the standard distributions are not,
/// so bounded draws go through uniform_below instead.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be non-zero.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  BitVec bits(std::size_t len) {
    BitVec v(len);
    std::uint64_t word = 0;
    for (std::size_t pos = 1; pos <= len; ++pos) {
      if ((pos - 1) % 64 == 0) word = engine_();
      if ((word >> ((pos - 1) % 64)) & 1U) v.set(pos);
    }
    return v;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace adjecc
