#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

#include "sumcheck/field.hpp"
#include "sumcheck/mpoly.hpp"

namespace sumcheck {

/// Thrown by to_uni when the polynomial mentions variables other than the
/// requested one.
class NotUnivariate : public std::invalid_argument {
 public:
  NotUnivariate(VarId expected, const std::set<VarId>& extra);
};

/// Univariate polynomial over F_p stored sparsely by exponent. No stored
/// coefficient is zero.
class UniPoly {
 public:
  explicit UniPoly(Modulus m) : modulus_(m) {}
  UniPoly(Modulus m, std::initializer_list<std::pair<std::uint32_t, std::int64_t>> coeffs);

  Modulus modulus() const noexcept { return modulus_; }
  const std::map<std::uint32_t, FieldElement>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest stored exponent; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  FieldElement coeff(std::uint32_t exponent) const;
  void add_term(std::uint32_t exponent, FieldElement c);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  Modulus modulus_;
  std::map<std::uint32_t, FieldElement> coeffs_;
};

/// Requires vars(p) to be a subset of {v}.
UniPoly to_uni(const MultiPoly& p, VarId v);
MultiPoly from_uni(const UniPoly& q, VarId v);

/// Horner evaluation.
FieldElement uni_eval(const UniPoly& q, FieldElement a);

/// Number of a in F_p with q(a) = 0, by scanning the whole field. q must be
/// nonzero.
std::uint64_t roots_count(const UniPoly& q);

/// Multiplicity of a as a root of q (largest k with (x - a)^k | q). q must be
/// nonzero.
std::uint32_t root_order(const UniPoly& q, FieldElement a);

/// Schoolbook product.
UniPoly multiply(const UniPoly& a, const UniPoly& b);

/// (x - a) over the field of a.
UniPoly linear_factor(FieldElement a);

}  // namespace sumcheck
