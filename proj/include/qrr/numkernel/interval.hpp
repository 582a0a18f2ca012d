#pragma once

#include "qrr/numkernel/rational.hpp"

#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>

namespace qrr {

// Owning handle around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

enum class Sign { Negative, Zero, Positive, Unresolved };
std::string to_string(Sign s);

// Closed real interval with MPFR endpoints; every operation rounds outward.
class RealInterval {
 public:
  explicit RealInterval(long prec = 64);
  static RealInterval point(const Rational& q, long prec);
  static RealInterval hull(const Rational& lo, const Rational& hi, long prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat& lo() { return lo_; }
  BigFloat& hi() { return hi_; }
  long precision() const { return static_cast<long>(lo_.precision()); }

  bool contains_zero() const;
  bool positive() const;  // lo > 0
  bool negative() const;  // hi < 0
  bool contains(const Rational& q) const;
  Sign sign() const;
  Rational lo_rational() const { return lo_.to_rational(); }
  Rational hi_rational() const { return hi_.to_rational(); }
  // Upper bound on the width.
  double width() const;
  // Upper bound on max(|lo|, |hi|).
  RealInterval abs() const;
  double mag() const;

  RealInterval& operator+=(const RealInterval& o);
  RealInterval& operator-=(const RealInterval& o);
  RealInterval& operator*=(const RealInterval& o);
  // Widens by [-r, r], r >= 0.
  RealInterval& inflate(const BigFloat& r);
  RealInterval& inflate(const Rational& r);

  friend RealInterval operator+(RealInterval a, const RealInterval& b) { return a += b; }
  friend RealInterval operator-(RealInterval a, const RealInterval& b) { return a -= b; }
  friend RealInterval operator*(RealInterval a, const RealInterval& b) { return a *= b; }
  friend RealInterval operator-(const RealInterval& a);

 private:
  BigFloat lo_, hi_;
};

RealInterval exp(const RealInterval& x);
RealInterval cos(const RealInterval& x);
RealInterval sin(const RealInterval& x);
RealInterval hull(const RealInterval& a, const RealInterval& b);

struct ComplexInterval {
  RealInterval re;
  RealInterval im;

  explicit ComplexInterval(long prec = 64) : re(prec), im(prec) {}
  ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval point(const ComplexRational& z, long prec);

  ComplexInterval& operator+=(const ComplexInterval& o);
  ComplexInterval& operator*=(const ComplexInterval& o);
  // Widens both parts by [-r, r].
  ComplexInterval& inflate(const BigFloat& r);
  // Upper bound on the modulus.
  BigFloat mag_upper() const;
};

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b);

// Enclosure of e^alpha whose real and imaginary widths are at most
// 2^-precision_bits.
ComplexInterval complex_exp_enclosure(const ComplexRational& alpha, long precision_bits);

using IntervalEvaluator = std::function<RealInterval(long precision_bits)>;
using ExactZeroTest = std::function<bool()>;

// Evaluates at 32, 64, ... bits until the enclosure excludes zero. Zero is
// returned only when an exact zero test is supplied and it fires.
Sign resolve_sign(const IntervalEvaluator& evaluator,
                  const std::optional<ExactZeroTest>& exact_zero_test = std::nullopt,
                  long max_precision_bits = 4096);

// Upward/downward rational helpers used for bound computations.
BigFloat to_big_up(const Rational& q, long prec);
BigFloat to_big_down(const Rational& q, long prec);

}  // namespace qrr
