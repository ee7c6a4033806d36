#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumcheck/field.hpp"
#include "sumcheck/mpoly.hpp"

namespace sumcheck {

/// Abstract polynomial structure: the four functions vars/deg/eval/inst over
/// an additive monoid of polynomials, with evaluation results in a second
/// additive monoid. Arguments (`Arg`) and results (`Result`) are distinct
/// roles so that module-valued instances stay expressible; the shipped field
/// instance identifies them.
///
/// `universe()` is the finite argument domain from which verifier randomness
/// is drawn.
template <class S>
concept PolynomialStructure =
    std::equality_comparable<typename S::Poly> && std::equality_comparable<typename S::Result> &&
    requires(const S& s, const typename S::Poly& p, const typename S::Subst& sub,
             const typename S::Var& x, const typename S::Arg& a, const typename S::Result& r) {
      { s.zero() } -> std::same_as<typename S::Poly>;
      { s.add(p, p) } -> std::same_as<typename S::Poly>;
      { s.vars(p) } -> std::same_as<std::set<typename S::Var>>;
      { s.deg(p) } -> std::convertible_to<std::uint64_t>;
      { s.eval(p, sub) } -> std::same_as<typename S::Result>;
      { s.inst(p, sub) } -> std::same_as<typename S::Poly>;
      { s.result_zero() } -> std::same_as<typename S::Result>;
      { s.result_add(r, r) } -> std::same_as<typename S::Result>;
      { s.empty_subst() } -> std::same_as<typename S::Subst>;
      { s.singleton(x, a) } -> std::same_as<typename S::Subst>;
      { s.update(sub, sub) } -> std::same_as<typename S::Subst>;
      { s.domain(sub) } -> std::same_as<std::set<typename S::Var>>;
      { s.universe() } -> std::same_as<std::vector<typename S::Arg>>;
    };

/// Sparse multivariate polynomials over one prime field.
class MPolyStructure {
 public:
  using Poly = MultiPoly;
  using Var = VarId;
  using Arg = FieldElement;
  using Result = FieldElement;
  using Subst = Substitution;

  explicit MPolyStructure(Modulus field) : field_(field) {}

  Modulus field() const noexcept { return field_; }

  Poly zero() const { return MultiPoly::zero(field_); }
  Poly add(const Poly& p, const Poly& q) const { return p + q; }
  std::set<Var> vars(const Poly& p) const { return sumcheck::vars(p); }
  std::uint64_t deg(const Poly& p) const { return total_degree(p); }
  Result eval(const Poly& p, const Subst& s) const { return sumcheck::eval(p, s); }
  Poly inst(const Poly& p, const Subst& s) const { return sumcheck::inst(p, s); }
  Result result_zero() const { return FieldElement::zero(field_); }
  Result result_add(const Result& a, const Result& b) const { return a + b; }
  Subst empty_subst() const { return {}; }
  Subst singleton(Var x, const Arg& a) const { return Substitution::single(x, a); }
  Subst update(const Subst& rho, const Subst& sigma) const { return Substitution::update(rho, sigma); }
  std::set<Var> domain(const Subst& s) const { return s.domain(); }
  std::vector<Arg> universe() const { return enumerate_field(field_); }

 private:
  Modulus field_;
};

static_assert(PolynomialStructure<MPolyStructure>);

/// Raised when an exhaustive enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every map from `vars` to `values` (|values|^|vars| of them). Variables are
/// assigned in ascending order; the last variable varies fastest.
template <PolynomialStructure S>
std::vector<typename S::Subst> substs(const S& s, const std::set<typename S::Var>& vars,
                                      const std::vector<typename S::Arg>& values) {
  std::vector<typename S::Subst> out{s.empty_subst()};
  if (!vars.empty() && values.empty()) {
    throw std::invalid_argument("cannot enumerate substitutions into an empty set H");
  }
  for (const auto& v : vars) {
    std::vector<typename S::Subst> next;
    next.reserve(out.size() * values.size());
    for (const auto& partial : out) {
      for (const auto& a : values) next.push_back(s.update(partial, s.singleton(v, a)));
    }
    out = std::move(next);
  }
  return out;
}

/// Sum of `eval p sigma` over sigma in substs(vars, values).
template <PolynomialStructure S>
typename S::Result sum_evals(const S& s, const typename S::Poly& p,
                             const std::set<typename S::Var>& vars,
                             const std::vector<typename S::Arg>& values) {
  auto acc = s.result_zero();
  for (const auto& sigma : substs(s, vars, values)) acc = s.result_add(acc, s.eval(p, sigma));
  return acc;
}

/// Sum of `inst p sigma` over sigma in substs(vars, values).
template <PolynomialStructure S>
typename S::Poly sum_insts(const S& s, const typename S::Poly& p,
                           const std::set<typename S::Var>& vars,
                           const std::vector<typename S::Arg>& values) {
  auto acc = s.zero();
  for (const auto& sigma : substs(s, vars, values)) acc = s.add(acc, s.inst(p, sigma));
  return acc;
}

/// Field-instance convenience wrapper around substs.
std::vector<Substitution> enumerate_substitutions(const std::set<VarId>& vars,
                                                  const std::vector<FieldElement>& values);

/// Default exhaustive-enumeration budget (number of items).
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;

/// Calls `fn` on each of the p^n tuples in lexicographic order (last position
/// fastest). Throws BudgetExceeded when p^n > budget.
void for_each_tuple(std::size_t n, Modulus m, std::uint64_t budget,
                    const std::function<void(const std::vector<FieldElement>&)>& fn);

/// Materialized form of for_each_tuple.
std::vector<std::vector<FieldElement>> enumerate_tuples(
    std::size_t n, Modulus m, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace sumcheck
