#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rtva/errors.hpp"

namespace rtva {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are always stored reduced with a positive denominator, so equal
/// values have identical representations and can be hashed or compared
/// structurally. Construction with a zero denominator and division by zero
/// throw DomainError; there are no infinities or NaNs.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q" or "p" (q > 0 after reduction); throws ParseError.
  static Rational parse(std::string_view text);

  /// Renders as "p/q", with "/q" omitted when the denominator is 1.
  std::string str() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Bit length of |numerator| (1 for zero) and of the denominator.
  std::size_t num_bits() const;
  std::size_t den_bits() const;
  /// max(num_bits, den_bits): the size measure used by growth probes.
  std::size_t bits() const;

  /// Exact integer power; negative exponents invert (zero base throws).
  Rational pow(long exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  /// Stable structural hash (equal values hash equally on any platform).
  std::uint64_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  // FNV-1a over 64-bit words.
  h ^= x;
  return h * 0x100000001b3ULL;
}

}  // namespace rtva
