#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumcheck {

/// Raised when two values from different prime fields are combined.
class ModulusMismatch : public std::invalid_argument {
 public:
  ModulusMismatch(std::uint32_t a, std::uint32_t b);
};

/// A prime modulus p with 2 <= p < 2^31.
///
/// Products of two residues fit in 64 bits, so all arithmetic is exact
/// without multi-precision support.
class Modulus {
 public:
  static constexpr std::uint64_t kMaxExclusive = std::uint64_t{1} << 31;

  /// Throws std::invalid_argument unless `p` is a prime below 2^31.
  explicit Modulus(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  friend class FieldElement;
  struct Trusted {};
  Modulus(std::uint32_t p, Trusted) : p_(p) {}
  static Modulus trusted(std::uint32_t p) { return Modulus(p, Trusted{}); }

  std::uint32_t p_;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Canonical residue in [0, p) tagged with its modulus.
class FieldElement {
 public:
  /// Reduces `value` (any signed integer) into [0, p).
  FieldElement(std::int64_t value, Modulus m);

  static FieldElement zero(Modulus m) { return FieldElement(0, m); }
  static FieldElement one(Modulus m) { return FieldElement(1, m); }

  std::uint32_t value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return Modulus::trusted(p_); }
  std::uint32_t prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(FieldElement rhs) const;
  FieldElement operator-(FieldElement rhs) const;
  FieldElement operator*(FieldElement rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(FieldElement rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(FieldElement rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(FieldElement rhs) { return *this = *this * rhs; }

  /// Multiplicative inverse; throws std::domain_error("no inverse") for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  friend bool operator==(FieldElement, FieldElement) = default;

  /// Total order by (modulus, residue); only used for ordered containers.
  friend auto operator<=>(FieldElement a, FieldElement b) = default;

 private:
  FieldElement(std::uint32_t p, std::uint32_t v, int /*raw*/) : p_(p), value_(v) {}
  void require_same(FieldElement rhs) const;

  std::uint32_t p_;
  std::uint32_t value_;
};

enum class ArithOp { kAdd, kSub, kMul, kNeg };

/// Dispatching form of the four ring operations; `b` is ignored for kNeg.
FieldElement arith(ArithOp op, FieldElement a, FieldElement b);

inline FieldElement inv(FieldElement a) { return a.inverse(); }

/// All p residues in ascending order.
std::vector<FieldElement> enumerate_field(Modulus m);

std::ostream& operator<<(std::ostream& os, FieldElement e);

}  // namespace sumcheck
