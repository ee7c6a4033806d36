#include "sumcheck/random_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumcheck {

FieldElement random_element(SplitMix64& rng, Modulus m) {
  auto [e, next] = sample_uniform(m, rng);
  rng = next;
  return e;
}

FieldElement random_nonzero(SplitMix64& rng, Modulus m) {
  return FieldElement(static_cast<std::int64_t>(1 + rng.below(m.value() - 1)), m);
}

MultiPoly random_poly(SplitMix64& rng, Modulus m, const std::vector<VarId>& pool,
                      const PolyShape& shape) {
  const auto roll = rng.below(100);
  if (roll < shape.zero_percent) return MultiPoly::zero(m);
  if (roll < shape.zero_percent + shape.constant_percent || pool.empty()) {
    return MultiPoly::constant(random_element(rng, m));
  }
  MultiPoly p(m);
  const auto terms = 1 + rng.below(shape.max_terms);
  for (std::uint64_t t = 0; t < terms; ++t) {
    const auto degree = rng.below(shape.max_monomial_degree + 1);
    std::vector<Monomial::Entry> entries;
    for (std::uint64_t k = 0; k < degree; ++k) entries.emplace_back(pool[rng.below(pool.size())], 1);
    p.add_term(Monomial(std::move(entries)), random_nonzero(rng, m));
  }
  return p;
}

MultiPoly random_univariate(SplitMix64& rng, Modulus m, VarId x, std::uint32_t max_degree) {
  MultiPoly p(m);
  const auto degree = rng.below(max_degree + 1);
  for (std::uint32_t e = 0; e <= degree; ++e) {
    p.add_term(Monomial::variable(x, e), random_element(rng, m));
  }
  return p;
}

std::set<VarId> random_var_set(SplitMix64& rng, VarId max_var, std::size_t max_size) {
  std::set<VarId> out;
  const auto size = rng.below(max_size + 1);
  for (std::uint64_t i = 0; i < size; ++i) out.insert(static_cast<VarId>(1 + rng.below(max_var)));
  return out;
}

Substitution random_substitution(SplitMix64& rng, Modulus m, const std::set<VarId>& domain) {
  Substitution s;
  for (auto v : domain) s.assign(v, random_element(rng, m));
  return s;
}

std::vector<FieldElement> random_subset_of_size(SplitMix64& rng, Modulus m, std::size_t size) {
  if (size == 0 || size > m.value()) {
    throw std::invalid_argument("subset size must lie in [1, p]");
  }
  std::vector<std::uint32_t> all(m.value());
  std::iota(all.begin(), all.end(), 0u);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = i + rng.below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(size);
  std::sort(all.begin(), all.end());
  std::vector<FieldElement> out;
  for (auto v : all) out.emplace_back(v, m);
  return out;
}

std::vector<FieldElement> random_subset(SplitMix64& rng, Modulus m, std::size_t max_size) {
  const auto cap = std::min<std::size_t>(max_size, m.value());
  return random_subset_of_size(rng, m, 1 + rng.below(cap));
}

}  // namespace sumcheck
