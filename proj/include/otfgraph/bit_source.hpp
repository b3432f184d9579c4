#pragma once

#include <cstdint>

#include "otfgraph/types.hpp"

namespace otfgraph {

/// Seeded xoshiro256** stream handed out one bit at a time so that every
/// stochastic choice can be charged exactly.
///
/// All randomness in the library flows through a BitSource. Two sources built
/// from the same seed produce the same bits, so replaying a seed replays every
/// downstream answer.
class BitSource {
 public:
  explicit BitSource(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t bits_consumed() const { return bits_consumed_; }

  /// A single unbiased bit.
  bool bit();

  /// The next `count` bits (count <= 64) as an unsigned integer.
  std::uint64_t bits(unsigned count);

  /// Exactly uniform on [0, m-1]. Uses the fast dice roller: a rejection
  /// scheme that recycles the rejected remainder, so the expected cost stays
  /// below log2(m) + 2 bits. Powers of two cost exactly log2(m) bits and
  /// m == 1 costs nothing.
  std::uint64_t uniform_int(std::uint64_t m);

  Flag uniform_flag() { return bit() ? Flag::rec : Flag::dir; }

 private:
  std::uint64_t next_word();

  std::uint64_t seed_;
  std::uint64_t state_[4];
  std::uint64_t buffer_ = 0;
  unsigned buffered_ = 0;
  std::uint64_t bits_consumed_ = 0;
};

}  // namespace otfgraph
