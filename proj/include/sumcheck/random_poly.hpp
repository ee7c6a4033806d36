#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sumcheck/field.hpp"
#include "sumcheck/mpoly.hpp"
#include "sumcheck/rng.hpp"

namespace sumcheck {

/// Bounds for random polynomials. The zero polynomial and constants are
/// drawn with explicit weight (out of 100) so sparsity edge cases show up.
struct PolyShape {
  std::uint32_t max_terms = 8;
  std::uint32_t max_monomial_degree = 6;
  std::uint32_t zero_percent = 8;
  std::uint32_t constant_percent = 8;
};

FieldElement random_element(SplitMix64& rng, Modulus m);
FieldElement random_nonzero(SplitMix64& rng, Modulus m);

/// Random polynomial whose variables lie in `pool`.
MultiPoly random_poly(SplitMix64& rng, Modulus m, const std::vector<VarId>& pool,
                      const PolyShape& shape = {});

/// Random polynomial in x alone with degree <= max_degree (possibly zero).
MultiPoly random_univariate(SplitMix64& rng, Modulus m, VarId x, std::uint32_t max_degree);

/// Random subset of {1..max_var} of size <= max_size.
std::set<VarId> random_var_set(SplitMix64& rng, VarId max_var, std::size_t max_size);

/// Substitution with domain exactly `domain`, uniform values.
Substitution random_substitution(SplitMix64& rng, Modulus m, const std::set<VarId>& domain);

/// Nonempty set of distinct field elements with at most max_size members,
/// in ascending order.
std::vector<FieldElement> random_subset(SplitMix64& rng, Modulus m, std::size_t max_size);

/// Exactly `size` distinct field elements, ascending; size <= p.
std::vector<FieldElement> random_subset_of_size(SplitMix64& rng, Modulus m, std::size_t size);

}  // namespace sumcheck
