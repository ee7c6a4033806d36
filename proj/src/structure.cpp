#include "sumcheck/structure.hpp"

namespace sumcheck {

std::vector<Substitution> enumerate_substitutions(const std::set<VarId>& vars,
                                                  const std::vector<FieldElement>& values) {
  if (!vars.empty() && values.empty()) {
    throw std::invalid_argument("H must be nonempty when V is nonempty");
  }
  if (values.empty()) return {Substitution{}};
  return substs(MPolyStructure(values.front().modulus()), vars, values);
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > UINT64_MAX / base) return UINT64_MAX;
    acc *= base;
  }
  return acc;
}

void for_each_tuple(std::size_t n, Modulus m, std::uint64_t budget,
                    const std::function<void(const std::vector<FieldElement>&)>& fn) {
  const auto total = saturating_pow(m.value(), n);
  if (total > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(m.value()) + "^" + std::to_string(n) +
                         " tuples exceeds the budget of " + std::to_string(budget) +
                         "; use Monte-Carlo mode (monte_carlo_acceptance) instead");
  }
  std::vector<FieldElement> tuple(n, FieldElement::zero(m));
  std::vector<std::uint32_t> digits(n, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    fn(tuple);
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < m.value()) {
        tuple[i] = FieldElement(digits[i], m);
        break;
      }
      digits[i] = 0;
      tuple[i] = FieldElement::zero(m);
    }
  }
}

std::vector<std::vector<FieldElement>> enumerate_tuples(std::size_t n, Modulus m,
                                                        std::uint64_t budget) {
  std::vector<std::vector<FieldElement>> out;
  for_each_tuple(n, m, budget, [&](const std::vector<FieldElement>& t) { out.push_back(t); });
  return out;
}

}  // namespace sumcheck
