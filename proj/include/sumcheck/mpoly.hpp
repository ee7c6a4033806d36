#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sumcheck/field.hpp"

namespace sumcheck {

using VarId = std::uint32_t;

/// Thrown by eval when the substitution leaves a variable of p unassigned.
class UncoveredVariable : public std::invalid_argument {
 public:
  explicit UncoveredVariable(VarId v);
  VarId variable() const noexcept { return var_; }

 private:
  VarId var_;
};

/// Product of variables with positive exponents, stored as (variable,
/// exponent) pairs sorted by variable. A zero exponent is never stored.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  /// Accepts entries in any order; zero exponents are dropped and repeated
  /// variables are merged by adding exponents.
  Monomial(std::initializer_list<Entry> entries);
  explicit Monomial(std::vector<Entry> entries);

  static Monomial variable(VarId v, std::uint32_t exponent = 1) { return Monomial({{v, exponent}}); }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint32_t exponent(VarId v) const noexcept;
  std::uint64_t total_degree() const noexcept;
  std::set<VarId> keys() const;
  bool is_one() const noexcept { return entries_.empty(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical order: ascending total degree, then graded-lex with x1 > x2 > ...
  /// (x1 sorts before x2, x1^2 before x1*x2). Serialization follows it.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept;

 private:
  void canonicalize();

  std::vector<Entry> entries_;
};

/// Finite partial map from variables to field elements of one field.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<VarId, FieldElement>> entries);

  static Substitution single(VarId v, FieldElement value) { return Substitution({{v, value}}); }

  /// Adds or overwrites; throws ModulusMismatch on a foreign field.
  void assign(VarId v, FieldElement value);
  std::optional<FieldElement> lookup(VarId v) const;
  bool contains(VarId v) const { return map_.contains(v); }
  std::set<VarId> domain() const;
  std::size_t size() const noexcept { return map_.size(); }
  bool empty() const noexcept { return map_.empty(); }
  const std::map<VarId, FieldElement>& entries() const noexcept { return map_; }

  /// `rho ++ sigma`: rho updated with sigma (sigma wins on shared keys).
  static Substitution update(const Substitution& rho, const Substitution& sigma);

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<VarId, FieldElement> map_;
};

/// Sparse multivariate polynomial over F_p in canonical normal form: no
/// stored coefficient is zero, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElement>;

  explicit MultiPoly(Modulus m) : modulus_(m) {}
  /// Coefficients are reduced mod p; like monomials are combined.
  MultiPoly(Modulus m, std::initializer_list<std::pair<Monomial, std::int64_t>> terms);
  MultiPoly(Modulus m, const std::vector<std::pair<Monomial, std::int64_t>>& terms);

  static MultiPoly zero(Modulus m) { return MultiPoly(m); }
  static MultiPoly constant(FieldElement c);
  static MultiPoly variable(VarId v, Modulus m);

  Modulus modulus() const noexcept { return modulus_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of `m`, zero when absent.
  FieldElement coeff(const Monomial& m) const;

  /// Adds c * m to the polynomial in place, dropping the term if it cancels.
  void add_term(const Monomial& m, FieldElement c);

  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly scaled(FieldElement c) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void require_same(Modulus other) const;

  Modulus modulus_;
  TermMap terms_;
};

std::set<VarId> vars(const MultiPoly& p);

/// Max over monomials of the exponent sum; 0 for the zero polynomial.
std::uint64_t total_degree(const MultiPoly& p);

/// Full evaluation. Every variable of p must be in dom(sigma).
FieldElement eval(const MultiPoly& p, const Substitution& sigma);

/// Partial evaluation: substitutes dom(sigma), grouping terms by their residual
/// monomial.
MultiPoly inst(const MultiPoly& p, const Substitution& sigma);

/// Product of sigma(v)^m(v) over v in dom(sigma).
FieldElement inst_mon_coeff(const Monomial& m, const Substitution& sigma, Modulus field);
/// `m` with every variable in dom(sigma) removed.
Monomial inst_mon_resid(const Monomial& m, const Substitution& sigma);

std::string to_string(const Monomial& m);
std::string to_string(const MultiPoly& p);

}  // namespace sumcheck
