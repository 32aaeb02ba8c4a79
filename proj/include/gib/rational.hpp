#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>

namespace gib {

using Integer = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : value_(v) {}
  Rational(int v) : value_(v) {}
  Rational(const Integer &v) : value_(v) {}
  Rational(const Integer &num, const Integer &den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const mpq_class &v) : value_(v) { value_.canonicalize(); }

  [[nodiscard]] Integer numerator() const { return value_.get_num(); }
  [[nodiscard]] Integer denominator() const { return value_.get_den(); }
  [[nodiscard]] bool isZero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] const mpq_class &raw() const { return value_; }

  /// Image in Z/pZ. Throws PreconditionError if p divides the denominator.
  [[nodiscard]] std::uint64_t modP(std::uint64_t p) const;

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] std::string str() const { return value_.get_str(); }
  /// Accepts "p" or "p/q" with optional sign.
  static Rational parse(const std::string &text);

private:
  mpq_class value_;
};

inline std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace gib
