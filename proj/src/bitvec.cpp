#include "adjecc/bitvec.hpp"

#include "adjecc/errors.hpp"

namespace adjecc {

BitVec::BitVec(std::size_t len) : len_(len) {
  if (len > max_size)
    throw argument_error("bit vector length " + std::to_string(len) + " exceeds " +
                         std::to_string(max_size));
}

BitVec BitVec::unit(std::size_t len, std::size_t pos) {
  BitVec v(len);
  v.set(pos);
  return v;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    switch (bits[i]) {
    case '0': break;
    case '1': v.set(i + 1); break;
    default:
      throw argument_error("invalid character '" + std::string(1, bits[i]) +
                           "' in bit string at position " + std::to_string(i + 1));
    }
  }
  return v;
}

BitVec BitVec::from_integer(std::size_t len, std::uint64_t value) {
  if (len > 64) throw argument_error("from_integer supports at most 64 bits");
  BitVec v(len);
  for (std::size_t pos = 1; pos <= len; ++pos)
    if ((value >> (len - pos)) & 1U) v.set(pos);
  return v;
}

bool BitVec::test(std::size_t pos) const {
  require_position(pos);
  const std::size_t i = pos - 1;
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void BitVec::set(std::size_t pos, bool value) {
  require_position(pos);
  const std::size_t i = pos - 1;
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

void BitVec::flip(std::size_t pos) {
  require_position(pos);
  const std::size_t i = pos - 1;
  words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

std::uint64_t BitVec::to_integer() const {
  if (len_ > 64) throw argument_error("to_integer supports at most 64 bits");
  std::uint64_t value = 0;
  for (std::size_t pos = 1; pos <= len_; ++pos) value = (value << 1) | (test(pos) ? 1U : 0U);
  return value;
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t pos = 1; pos <= len_; ++pos)
    if (test(pos)) s[pos - 1] = '1';
  return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_size(other);
  words_[0] ^= other.words_[0];
  words_[1] ^= other.words_[1];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  require_same_size(other);
  words_[0] &= other.words_[0];
  words_[1] &= other.words_[1];
  return *this;
}

void BitVec::require_same_size(const BitVec& other) const {
  if (len_ != other.len_)
    throw argument_error("bit vector length mismatch: " + std::to_string(len_) + " vs " +
                         std::to_string(other.len_));
}

void BitVec::require_position(std::size_t pos) const {
  if (pos == 0 || pos > len_)
    throw argument_error("bit position " + std::to_string(pos) + " outside 1.." +
                         std::to_string(len_));
}

bool dot(const BitVec& a, const BitVec& b) {
  return (a & b).count() % 2 == 1;
}

} // namespace adjecc
