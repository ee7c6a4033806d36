#include "sumcheck/field.hpp"

#include <utility>

namespace sumcheck {

ModulusMismatch::ModulusMismatch(std::uint32_t a, std::uint32_t b)
    : std::invalid_argument("incompatible instances: modulus " + std::to_string(a) +
                            " vs " + std::to_string(b)) {}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t p) : p_(0) {
  if (p < 2 || p >= kMaxExclusive) {
    throw std::invalid_argument("modulus must lie in [2, 2^31), got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

FieldElement::FieldElement(std::int64_t value, Modulus m) : p_(m.value()), value_(0) {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  value_ = static_cast<std::uint32_t>(r);
}

void FieldElement::require_same(FieldElement rhs) const {
  if (p_ != rhs.p_) throw ModulusMismatch(p_, rhs.p_);
}

FieldElement FieldElement::operator+(FieldElement rhs) const {
  require_same(rhs);
  std::uint64_t s = std::uint64_t{value_} + rhs.value_;
  if (s >= p_) s -= p_;
  return {p_, static_cast<std::uint32_t>(s), 0};
}

FieldElement FieldElement::operator-(FieldElement rhs) const {
  require_same(rhs);
  std::uint64_t s = std::uint64_t{value_} + p_ - rhs.value_;
  if (s >= p_) s -= p_;
  return {p_, static_cast<std::uint32_t>(s), 0};
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
  require_same(rhs);
  return {p_, static_cast<std::uint32_t>(std::uint64_t{value_} * rhs.value_ % p_), 0};
}

FieldElement FieldElement::operator-() const {
  return {p_, value_ == 0 ? 0u : p_ - value_, 0};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  std::uint64_t base = value_;
  std::uint64_t acc = 1 % p_;
  while (exponent > 0) {
    if (exponent & 1u) acc = acc * base % p_;
    base = base * base % p_;
    exponent >>= 1;
  }
  return {p_, static_cast<std::uint32_t>(acc), 0};
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw std::domain_error("no inverse: zero in F_" + std::to_string(p_));
  // Extended Euclid on (value, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = value_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return FieldElement(t, modulus());
}

FieldElement arith(ArithOp op, FieldElement a, FieldElement b) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kNeg: return -a;
  }
  throw std::invalid_argument("unknown field operation");
}

std::vector<FieldElement> enumerate_field(Modulus m) {
  std::vector<FieldElement> out;
  out.reserve(m.value());
  for (std::uint32_t i = 0; i < m.value(); ++i) out.emplace_back(i, m);
  return out;
}

std::ostream& operator<<(std::ostream& os, FieldElement e) { return os << e.value(); }

}  // namespace sumcheck
