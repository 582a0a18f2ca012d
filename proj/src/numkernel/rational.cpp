#include "qrr/numkernel/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace qrr {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Unsigned rational literal: digits, digits/digits or digits.digits.
Rational parse_unsigned(std::string_view s) {
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("bad decimal literal");
    Integer n(std::string(ip) + std::string(fp) + (ip.empty() && fp.empty() ? "0" : ""), 10);
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  if (!all_digits(s)) throw std::invalid_argument("bad rational literal");
  return Rational(Integer(std::string(s), 10));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool neg = false;
  std::string_view body(s);
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  Rational q = parse_unsigned(body);
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

Rational dyadic_floor(const Rational& x, long bits) {
  Rational scaled = x * pow2(bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(f) * pow2(-bits);
}

Rational dyadic_ceil(const Rational& x, long bits) {
  Rational scaled = x * pow2(bits);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(c) * pow2(-bits);
}

Rational dyadic_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("dyadic_between: empty range");
  Rational w = hi - lo;
  Rational a = lo + w / 4, b = hi - w / 4;
  for (long k = 0;; ++k) {
    Rational c = dyadic_ceil(a, k);
    if (c <= b) return c;
  }
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  *this = *this * o;
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  Rational n = norm2(o);
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return ComplexRational(Rational(a.re * b.re));
  return ComplexRational(Rational(a.re * b.re - a.im * b.im),
                         Rational(a.re * b.im + a.im * b.re));
}

ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
ComplexRational operator-(const ComplexRational& a) {
  return ComplexRational(Rational(-a.re), Rational(-a.im));
}

bool operator==(const ComplexRational& a, const ComplexRational& b) {
  return a.re == b.re && a.im == b.im;
}

std::strong_ordering operator<=>(const ComplexRational& a, const ComplexRational& b) {
  int c = cmp(a.re, b.re);
  if (c == 0) c = cmp(a.im, b.im);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ComplexRational conj(const ComplexRational& z) { return ComplexRational(z.re, Rational(-z.im)); }

Rational norm2(const ComplexRational& z) { return z.re * z.re + z.im * z.im; }

namespace {

Rational sqrt_bound(const Rational& n2, long bits, mpfr_rnd_t rnd) {
  mpfr_t x;
  mpfr_init2(x, bits < 16 ? 16 : bits);
  mpfr_set_q(x, n2.get_mpq_t(), rnd);
  mpfr_sqrt(x, x, rnd);
  Rational out;
  mpfr_get_q(out.get_mpq_t(), x);
  mpfr_clear(x);
  return out;
}

}  // namespace

Rational modulus_upper(const ComplexRational& z, long bits) {
  if (sgn(z.im) == 0) return abs(z.re);
  if (sgn(z.re) == 0) return abs(z.im);
  return sqrt_bound(norm2(z), bits, MPFR_RNDU);
}

Rational modulus_lower(const ComplexRational& z, long bits) {
  if (sgn(z.im) == 0) return abs(z.re);
  if (sgn(z.re) == 0) return abs(z.im);
  return sqrt_bound(norm2(z), bits, MPFR_RNDD);
}

Rational modulus_upper(const Rational& x, long) { return abs(x); }

ComplexRational parse_complex_rational(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return ComplexRational(parse_rational(s));
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  auto imag_part = [](std::string body) -> Rational {
    if (body.empty() || body == "+") return Rational(1);
    if (body == "-") return Rational(-1);
    return parse_rational(body);
  };
  if (split == std::string::npos) return ComplexRational(Rational(0), imag_part(s));
  return ComplexRational(parse_rational(s.substr(0, split)), imag_part(s.substr(split)));
}

std::string to_string(const ComplexRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string im = to_string(abs(z.im)) + "i";
  if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + im;
  return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im;
}

}  // namespace qrr
