#include "rtva/rational.hpp"

#include <cctype>
#include <ostream>

namespace rtva {
namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

std::size_t Rational::num_bits() const {
  return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
}

std::size_t Rational::den_bits() const {
  return mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
}

std::size_t Rational::bits() const {
  return std::max(num_bits(), den_bits());
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  if (is_zero() && exponent < 0) throw DomainError("0 raised to negative power");
  unsigned long e =
      exponent > 0 ? static_cast<unsigned long>(exponent)
                   : static_cast<unsigned long>(-(exponent + 1)) + 1;
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(pd.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return exponent > 0 ? Rational(pn, pd) : Rational(pd, pn);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::uint64_t Rational::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const mpz_srcptr n = v_.get_num().get_mpz_t();
  const mpz_srcptr d = v_.get_den().get_mpz_t();
  h = hash_mix(h, static_cast<std::uint64_t>(mpz_sgn(n) + 1));
  for (std::size_t i = 0; i < mpz_size(n); ++i) {
    h = hash_mix(h, static_cast<std::uint64_t>(mpz_getlimbn(n, i)));
  }
  h = hash_mix(h, 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < mpz_size(d); ++i) {
    h = hash_mix(h, static_cast<std::uint64_t>(mpz_getlimbn(d, i)));
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace rtva
