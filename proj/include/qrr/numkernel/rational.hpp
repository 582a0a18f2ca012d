#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace qrr {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q" and plain decimals such as "-0.125"; throws
// std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

Rational pow2(long e);
Rational dyadic_floor(const Rational& x, long bits);
Rational dyadic_ceil(const Rational& x, long bits);
// Simplest dyadic strictly between lo and hi (lo < hi).
Rational dyadic_between(const Rational& lo, const Rational& hi);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(long r) : re(r) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);
};

ComplexRational operator+(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(ComplexRational a, const ComplexRational& b);
ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);
ComplexRational operator/(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(const ComplexRational& a);
bool operator==(const ComplexRational& a, const ComplexRational& b);
// Lexicographic on (re, im); only used for canonical ordering.
std::strong_ordering operator<=>(const ComplexRational& a, const ComplexRational& b);

ComplexRational conj(const ComplexRational& z);
Rational norm2(const ComplexRational& z);
// Rational bounds on |z| good to roughly `bits` relative bits.
Rational modulus_upper(const ComplexRational& z, long bits = 64);
Rational modulus_lower(const ComplexRational& z, long bits = 64);
Rational modulus_upper(const Rational& x, long bits = 64);

// Grammar: SIGN? RAT (SIGN RAT "i")?  plus pure imaginary forms like "i",
// "-3/2i". Throws std::invalid_argument.
ComplexRational parse_complex_rational(std::string_view text);
std::string to_string(const ComplexRational& z);

}  // namespace qrr
