#pragma once

#include <cstddef>
#include <cstdint>

#include "pnc/nesting.hpp"

namespace pnc {

/// 64-bit linear congruential generator (Knuth's MMIX constants). Portable
/// across implementations so generated fixtures can be shared.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  /// Uniform-ish draw in [lo, hi] from the high 31 bits of the next state.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + (next() >> 33) % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

/// Builds depth + 1 random simple cycles labelled g0, g1, ... with lengths in
/// [3, max_link_len], picks a joint on each, and composes them. Deterministic
/// in `seed`. Throws OutOfRange when max_link_len < 3.
NestedCircuit random_pnc(std::uint64_t seed, std::size_t depth, std::size_t max_link_len);

/// The chain random_pnc() composes, before composition.
ChainOfCycles random_chain(std::uint64_t seed, std::size_t depth, std::size_t max_link_len);

}  // namespace pnc
