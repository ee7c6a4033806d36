#pragma once

#include <cstdint>
#include <utility>

#include "sumcheck/field.hpp"

namespace sumcheck {

/// SplitMix64 (Steele, Lea, Flood 2014). The whole state is one 64-bit word,
/// so generators are copied and advanced by value.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  constexpr std::uint64_t state() const noexcept { return state_; }

  friend constexpr bool operator==(SplitMix64, SplitMix64) = default;

 private:
  std::uint64_t state_;
};

/// Mixes a base seed with a stream index into an independent seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  SplitMix64 g(seed ^ (stream * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
  g.next();
  return g.next();
}

/// Uniform field element; returns the drawn element and the advanced state.
std::pair<FieldElement, SplitMix64> sample_uniform(Modulus m, SplitMix64 state);

}  // namespace sumcheck
