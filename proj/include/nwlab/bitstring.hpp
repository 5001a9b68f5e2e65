#pragma once

// Finite bit sequences. Index 0 is the leftmost bit and integer conversions
// are big-endian (leftmost bit most significant) -- one global convention,
// used everywhere a string is restricted to an index set or turned into a
// table index.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nwlab {

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n) : bits_(n, 0) {}

  static BitString from_string(std::string_view text);
  // Big-endian: from_value(5, 4) == "0101".
  static BitString from_value(std::uint64_t value, std::size_t width);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int bit(std::size_t i) const { return bits_[i]; }
  void set_bit(std::size_t i, int v) { bits_[i] = static_cast<std::uint8_t>(v & 1); }

  void push_back(int v) { bits_.push_back(static_cast<std::uint8_t>(v & 1)); }
  void append(const BitString& other);
  void clear() { bits_.clear(); }

  // Bits at the given positions, in the order given (callers pass ascending
  // design-set indices).
  BitString restricted(std::span<const std::size_t> positions) const;

  // Big-endian integer value; size() must be <= 64.
  std::uint64_t to_value() const;

  std::string to_string() const;

  std::size_t popcount() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  // Lexicographic; on equal lengths this matches big-endian numeric order.
  friend auto operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

BitString concat(const BitString& a, const BitString& b);

// |{i : a_i != b_i}|. Lengths must match; a mismatch throws
// std::invalid_argument rather than returning any distance.
std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace nwlab
