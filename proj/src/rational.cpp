#include "gib/rational.hpp"

#include "gib/errors.hpp"
#include "gib/modp.hpp"

namespace gib {

Rational::Rational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.isZero())
    throw PreconditionError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::uint64_t Rational::modP(std::uint64_t p) const {
  Integer pz(static_cast<unsigned long>(p));
  Integer n = value_.get_num() % pz;
  if (n < 0)
    n += pz;
  Integer d = value_.get_den() % pz;
  if (d == 0)
    throw PreconditionError("denominator divisible by evaluation prime");
  return modp::mul(n.get_ui(), modp::inverse(d.get_ui(), p), p);
}

Rational Rational::parse(const std::string &text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument &) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

} // namespace gib
