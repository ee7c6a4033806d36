#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "sumcheck/protocol.hpp"

namespace sumcheck {

// Dishonest provers. Each one sends messages that pass the variable, degree
// and evaluation checks of the current round; they differ in how the
// discrepancy delta = v - (true remaining sum) is carried forward.

struct SumFixConstant {
  friend bool operator==(const SumFixConstant&, const SumFixConstant&) = default;
};

struct RootPlanting {
  /// Upper bound on planted roots per round (the degree of p also bounds it).
  std::uint32_t root_budget = std::numeric_limits<std::uint32_t>::max();
  friend bool operator==(const RootPlanting&, const RootPlanting&) = default;
};

struct RandomValid {
  std::uint64_t seed = 0;
  friend bool operator==(const RandomValid&, const RandomValid&) = default;
};

using AdversaryKind = std::variant<SumFixConstant, RootPlanting, RandomValid>;

/// Maximum number of candidate root sets examined per round.
inline constexpr std::uint64_t kRootSearchBudget = 10'000;

/// Sends q + delta * |H|^-1. Every later claim stays off by a nonzero
/// constant, so it never convinces the verifier of a false claim.
class SumFixProver final : public ProverStrategy {
 public:
  std::string name() const override { return "sum-fix"; }
  std::pair<MultiPoly, ProverState> next_message(const SumcheckInstance& inst, VarId x,
                                                 const std::vector<VarId>& xs, FieldElement r,
                                                 const ProverState& state) const override;
};

/// Sends q + delta * c where c vanishes on up to deg(p) chosen points and sums
/// to 1 over H. If the verifier's challenge hits a planted root the claim
/// becomes true and the prover continues honestly.
class RootPlantingProver final : public ProverStrategy {
 public:
  explicit RootPlantingProver(std::uint32_t root_budget = RootPlanting{}.root_budget);
  std::string name() const override { return "root-plant"; }
  std::pair<MultiPoly, ProverState> next_message(const SumcheckInstance& inst, VarId x,
                                                 const std::vector<VarId>& xs, FieldElement r,
                                                 const ProverState& state) const override;

 private:
  std::uint32_t root_budget_;
};

/// Sends a uniformly random polynomial in x of degree <= deg(p), shifted by a
/// constant so it passes the evaluation check. Draws depend only on the seed
/// and the round index.
class RandomValidProver final : public ProverStrategy {
 public:
  explicit RandomValidProver(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "random:" + std::to_string(seed_); }
  std::pair<MultiPoly, ProverState> next_message(const SumcheckInstance& inst, VarId x,
                                                 const std::vector<VarId>& xs, FieldElement r,
                                                 const ProverState& state) const override;

 private:
  std::uint64_t seed_;
};

/// Free-function forms.
std::pair<MultiPoly, ProverState> sum_fix_constant_message(const SumcheckInstance& inst, VarId x,
                                                           const std::vector<VarId>& xs, FieldElement r,
                                                           const ProverState& state);
std::pair<MultiPoly, ProverState> root_planting_message(const SumcheckInstance& inst, VarId x,
                                                        const std::vector<VarId>& xs, FieldElement r,
                                                        const ProverState& state,
                                                        std::uint32_t root_budget = RootPlanting{}.root_budget);
std::pair<MultiPoly, ProverState> random_valid_message(const SumcheckInstance& inst, VarId x,
                                                       const std::vector<VarId>& xs, FieldElement r,
                                                       const ProverState& state, std::uint64_t seed);

/// Correction polynomial alpha * prod (x - a_i) with sum over H equal to 1,
/// using at most `max_roots` distinct roots, searched lexicographically from
/// the largest admissible root count down. Returns the polynomial and its
/// root set; the root set is empty when only a constant works. Throws
/// PreconditionError if nothing (not even a constant) sums to 1 over H.
std::pair<MultiPoly, std::vector<FieldElement>> find_correction(const std::vector<FieldElement>& H, VarId x,
                                                                std::uint32_t max_roots,
                                                                std::uint64_t search_budget = kRootSearchBudget);

std::unique_ptr<ProverStrategy> make_adversary(const AdversaryKind& kind);

/// Parses `honest`, `sum-fix`, `root-plant` or `random:<seed>`. Throws
/// std::invalid_argument on anything else.
std::unique_ptr<ProverStrategy> make_prover(std::string_view spec);

}  // namespace sumcheck
