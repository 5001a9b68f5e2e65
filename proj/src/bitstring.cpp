#include "nwlab/bitstring.hpp"

#include <stdexcept>

namespace nwlab {

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c == '0')
      out.bits_.push_back(0);
    else if (c == '1')
      out.bits_.push_back(1);
    else
      throw std::invalid_argument("BitString: expected only '0'/'1', got '" +
                                  std::string(1, c) + "'");
  }
  return out;
}

BitString BitString::from_value(std::uint64_t value, std::size_t width) {
  if (width > 64) throw std::invalid_argument("BitString::from_value: width > 64");
  if (width < 64 && (value >> width) != 0)
    throw std::invalid_argument("BitString::from_value: value does not fit width");
  BitString out(width);
  for (std::size_t i = 0; i < width; ++i)
    out.bits_[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1);
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::restricted(std::span<const std::size_t> positions) const {
  BitString out;
  out.bits_.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= bits_.size())
      throw std::out_of_range("BitString::restricted: position out of range");
    out.bits_.push_back(bits_[p]);
  }
  return out;
}

std::uint64_t BitString::to_value() const {
  if (bits_.size() > 64) throw std::overflow_error("BitString::to_value: more than 64 bits");
  std::uint64_t v = 0;
  for (std::uint8_t b : bits_) v = (v << 1) | b;
  return v;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::size_t BitString::popcount() const {
  std::size_t c = 0;
  for (std::uint8_t b : bits_) c += b;
  return c;
}

BitString concat(const BitString& a, const BitString& b) {
  BitString out = a;
  out.append(b);
  return out;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: length mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a.bit(i) != b.bit(i));
  return d;
}

}  // namespace nwlab
