#include "otfgraph/bit_source.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace otfgraph {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

BitSource::BitSource(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& s : state_) s = splitmix64(x);
}

std::uint64_t BitSource::next_word() {
  const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

bool BitSource::bit() {
  if (buffered_ == 0) {
    buffer_ = next_word();
    buffered_ = 64;
  }
  const bool b = buffer_ & 1U;
  buffer_ >>= 1;
  --buffered_;
  ++bits_consumed_;
  return b;
}

std::uint64_t BitSource::bits(unsigned count) {
  if (count > 64) throw std::invalid_argument("bits: count > 64");
  std::uint64_t out = 0;
  unsigned filled = 0;
  while (filled < count) {
    if (buffered_ == 0) {
      buffer_ = next_word();
      buffered_ = 64;
    }
    const unsigned take = std::min(count - filled, buffered_);
    const std::uint64_t mask =
        take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
    out |= (buffer_ & mask) << filled;
    buffer_ = take == 64 ? 0 : buffer_ >> take;
    buffered_ -= take;
    filled += take;
  }
  bits_consumed_ += count;
  return out;
}

std::uint64_t BitSource::uniform_int(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("uniform_int: m must be positive");
  if (m == 1) return 0;
  if (std::has_single_bit(m)) return bits(static_cast<unsigned>(std::countr_zero(m)));
  if (m > (std::uint64_t{1} << 62)) {
    // The dice roller keeps v < 2m, which would overflow here; plain rejection
    // over 64 bits is still exact.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m);
    for (;;) {
      const std::uint64_t x = bits(64);
      if (x < limit) return x % m;
    }
  }
  // Lumbroso's fast dice roller.
  std::uint64_t v = 1;
  std::uint64_t c = 0;
  for (;;) {
    v <<= 1;
    c = (c << 1) | static_cast<std::uint64_t>(bit());
    if (v >= m) {
      if (c < m) return c;
      v -= m;
      c -= m;
    }
  }
}

}  // namespace otfgraph
