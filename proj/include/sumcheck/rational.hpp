#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sumcheck {

/// Non-negative exact fraction in lowest terms. Comparisons cross-multiply in
/// 128 bits, so no value is ever rounded.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    const auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(Rational a, Rational b) {
    const auto g = std::gcd(a.den_, b.den_);
    const unsigned __int128 den = static_cast<unsigned __int128>(a.den_ / g) * b.den_;
    const unsigned __int128 num =
        static_cast<unsigned __int128>(a.num_) * (b.den_ / g) +
        static_cast<unsigned __int128>(b.num_) * (a.den_ / g);
    return reduce128(num, den);
  }

  /// Division by a positive integer.
  friend Rational operator/(Rational a, std::uint64_t k) {
    if (k == 0) throw std::domain_error("rational division by zero");
    return reduce128(a.num_, static_cast<unsigned __int128>(a.den_) * k);
  }

  friend bool operator==(Rational a, Rational b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(Rational a, Rational b) noexcept {
    const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.str(); }

 private:
  static Rational reduce128(unsigned __int128 num, unsigned __int128 den) {
    unsigned __int128 a = num, b = den;
    while (b != 0) {
      const auto t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      num /= a;
      den /= a;
    }
    if (num > UINT64_MAX || den > UINT64_MAX) throw std::overflow_error("rational overflow");
    return Rational(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den == 0 ? 1 : den));
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace sumcheck
