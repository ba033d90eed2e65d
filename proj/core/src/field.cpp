#include "modsuper/field.hpp"

#include <sstream>

namespace modsuper {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::MalformedDatum: return "MalformedDatum";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::HeightExceeded: return "HeightExceeded";
    case ErrorKind::Diverged: return "Diverged";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::Incomplete: return "Incomplete";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InhomogeneousSum: return "InhomogeneousSum";
    case ErrorKind::BadGenerator: return "BadGenerator";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::CorpusCorrupt: return "CorpusCorrupt";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(detail) {}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ == 2) throw Error(ErrorKind::InvalidField, "characteristic 2 is not supported");
  if (p_ != 0 && !is_prime(p_))
    throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p_) + " is not prime");
  if (p_ >= (1u << 31)) throw Error(ErrorKind::InvalidField, "characteristic too large");
}

Rational FieldSpec::reduce(const Rational& a) const {
  if (p_ == 0) return a;
  return Rational(PrimeField(p_).from_rational(a));
}

Rational FieldSpec::add(const Rational& a, const Rational& b) const { return reduce(a + b); }
Rational FieldSpec::sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
Rational FieldSpec::mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
Rational FieldSpec::neg(const Rational& a) const { return reduce(-a); }

Rational FieldSpec::inv(const Rational& a) const {
  Rational r = reduce(a);
  if (r == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  if (p_ == 0) return 1 / r;
  PrimeField f(p_);
  return Rational(f.inv(f.from_rational(r)));
}

bool FieldSpec::is_zero(const Rational& a) const { return reduce(a) == 0; }

Rational FieldSpec::symmetric_lift(const Rational& a) const {
  if (p_ == 0) return a;
  Rational r = reduce(a);
  if (r > Rational(p_ / 2)) r -= p_;
  return r;
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

Rational scalar_inverse(const Rational& a, const FieldSpec& f) { return f.inv(a); }

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer pp = p;
  Integer n = num % pp;
  if (n < 0) n += pp;
  Integer d = den % pp;
  if (d < 0) d += pp;
  if (d == 0) throw Error(ErrorKind::ZeroInverse, "denominator divisible by the characteristic");
  value_type nv = static_cast<value_type>(n);
  value_type dv = static_cast<value_type>(d);
  return mul(nv, inv(dv));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  return 1 / a;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace modsuper
