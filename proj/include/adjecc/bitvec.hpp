#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace adjecc {

/// Fixed-length GF(2) vector of up to 128 bits.
///
/// Positions are 1-based and position 1 is the leftmost character of the
/// printed form, so `BitVec::from_string("0100010").test(2)` is true.
class BitVec {
public:
  static constexpr std::size_t max_size = 128;

  BitVec() = default;

  /// All-zero vector of `len` bits. Throws argument_error when len > 128.
  explicit BitVec(std::size_t len);

  static BitVec zeros(std::size_t len) { return BitVec(len); }
  static BitVec unit(std::size_t len, std::size_t pos);

  /// Parses a string of '0'/'1' characters; anything else is an argument_error.
  static BitVec from_string(std::string_view bits);

  /// Low `len` bits of `value`, with position `len` holding bit 0.
  /// Requires len <= 64.
  static BitVec from_integer(std::size_t len, std::uint64_t value);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);
  void flip(std::size_t pos);

  bool any() const noexcept { return (words_[0] | words_[1]) != 0; }
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }

  /// Inverse of from_integer. Requires size() <= 64.
  std::uint64_t to_integer() const;
  std::string to_string() const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    // Compare as printed strings: position 1 is most significant.
    return a.to_string() <=> b.to_string();
  }

  /// Raw storage: position p lives in bit (p-1)%64 of word (p-1)/64.
  const std::array<std::uint64_t, 2>& words() const noexcept { return words_; }

private:
  void require_same_size(const BitVec& other) const;
  void require_position(std::size_t pos) const;

  std::size_t len_ = 0;
  std::array<std::uint64_t, 2> words_{};
};

/// GF(2) inner product: parity of the popcount of a & b.
bool dot(const BitVec& a, const BitVec& b);

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept {
    const auto& w = v.words();
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (w[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    h ^= v.size();
    return static_cast<std::size_t>(h);
  }
};

} // namespace adjecc

template <>
struct std::hash<adjecc::BitVec> : adjecc::BitVecHash {};
