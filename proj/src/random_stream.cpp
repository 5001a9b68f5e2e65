#include "nwlab/random_stream.hpp"

#include <stdexcept>

namespace nwlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_label(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label folded into the seed, then scrambled.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed)
    : seed_(seed), engine_(splitmix64(seed)) {}

int RandomStream::next_bit() {
  if (buffer_left_ == 0) {
    buffer_ = engine_();
    buffer_left_ = 64;
  }
  int b = static_cast<int>(buffer_ & 1);
  buffer_ >>= 1;
  --buffer_left_;
  ++position_;
  return b;
}

BitString RandomStream::next_bits(std::size_t count) {
  BitString out(count);
  for (std::size_t i = 0; i < count; ++i) out.set_bit(i, next_bit());
  return out;
}

std::uint64_t RandomStream::next_u64() {
  buffer_left_ = 0;  // discard partial buffer so u64 draws are word-aligned
  position_ += 64;
  return engine_();
}

std::uint64_t RandomStream::next_below(std::uint64_t n) {
  if (n == 0) throw std::domain_error("RandomStream::next_below: n must be >= 1");
  if (n == 1) return 0;
  // Draw just enough bits to cover [0, n) and reject overshoots.
  int width = 0;
  while ((n - 1) >> width) ++width;
  for (;;) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(next_bit());
    if (v < n) return v;
  }
}

RandomStream RandomStream::split(std::string_view label) const {
  return RandomStream(mix_label(seed_, label));
}

}  // namespace nwlab
