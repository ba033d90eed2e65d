#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "modsuper/errors.hpp"

namespace modsuper {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Ground field: GF(p) for an odd prime p, or the rationals when p == 0.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  // Canonical representative: residue 0..p-1, or a reduced fraction.
  Rational reduce(const Rational& a) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  bool is_zero(const Rational& a) const;

  // Representative in -(p-1)/2 .. (p-1)/2; identity for p == 0.
  Rational symmetric_lift(const Rational& a) const;

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_ = 3;
};

bool is_prime(std::uint32_t n);

Rational scalar_inverse(const Rational& a, const FieldSpec& f);

// Hot-path field for GF(p), p < 2^31.
struct PrimeField {
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t prime) : p(prime) {}

  std::uint32_t p;

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p);
  }
  // a + b*c
  value_type fma(value_type a, value_type b, value_type c) const noexcept {
    return static_cast<value_type>((a + static_cast<std::uint64_t>(b) * c) % p);
  }
  value_type inv(value_type a) const;
  value_type from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type from_rational(const Rational& q) const;
  Rational to_rational(value_type a) const { return Rational(a); }
  FieldSpec spec() const { return FieldSpec(p); }
};

// Exact rationals, arbitrary precision.
struct RationalField {
  using value_type = Rational;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type fma(const value_type& a, const value_type& b, const value_type& c) const { return a + b * c; }
  value_type inv(const value_type& a) const;
  value_type from_int(long long v) const { return Rational(v); }
  value_type from_rational(const Rational& q) const { return q; }
  Rational to_rational(const value_type& a) const { return a; }
  FieldSpec spec() const { return FieldSpec(0); }
};

template <class F>
inline typename F::value_type sign_value(const F& field, bool negative) {
  return negative ? field.neg(field.one()) : field.one();
}

// Dispatches a generic callable on the concrete field type.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{spec.characteristic()});
}

std::string to_string(const Rational& q);

}  // namespace modsuper
