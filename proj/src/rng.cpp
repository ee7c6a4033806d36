#include "sumcheck/rng.hpp"

namespace sumcheck {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Reject the top partial block so every residue class is equally likely.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::pair<FieldElement, SplitMix64> sample_uniform(Modulus m, SplitMix64 state) {
  const auto v = state.below(m.value());
  return {FieldElement(static_cast<std::int64_t>(v), m), state};
}

}  // namespace sumcheck
