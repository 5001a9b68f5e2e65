#pragma once

// Deterministic randomness. Every experiment draws all of its bits from a
// RandomStream rooted at a 64-bit master seed; identical seeds replay
// identical sequences on every platform (mt19937_64's output is pinned by the
// standard, and no std distributions are used). Sub-tasks get independent
// streams via split(label).
//
// Streams are single-owner: share across threads by splitting, not by
// reference.

#include <cstdint>
#include <random>
#include <string_view>

#include "nwlab/bitstring.hpp"

namespace nwlab {

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  // Bits handed out so far (engine words count as 64).
  std::uint64_t position() const { return position_; }

  int next_bit();
  BitString next_bits(std::size_t count);
  std::uint64_t next_u64();
  // Uniform in [0, n), n >= 1. Unbiased via rejection sampling.
  std::uint64_t next_below(std::uint64_t n);

  // Independent stream determined by (seed, label) only; unaffected by and
  // not affecting this stream's position.
  RandomStream split(std::string_view label) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t position_ = 0;
  std::uint64_t buffer_ = 0;
  int buffer_left_ = 0;
};

}  // namespace nwlab
