#include "qrr/numkernel/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrr {

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("non-finite interval endpoint");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    case Sign::Unresolved: return "Unresolved";
  }
  return "?";
}

BigFloat to_big_up(const Rational& q, long prec) {
  BigFloat b(prec);
  mpfr_set_q(b.get(), q.get_mpq_t(), MPFR_RNDU);
  return b;
}

BigFloat to_big_down(const Rational& q, long prec) {
  BigFloat b(prec);
  mpfr_set_q(b.get(), q.get_mpq_t(), MPFR_RNDD);
  return b;
}

RealInterval::RealInterval(long prec) : lo_(prec), hi_(prec) {}

RealInterval RealInterval::point(const Rational& q, long prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::hull(const Rational& lo, const Rational& hi, long prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}
bool RealInterval::positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool RealInterval::negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool RealInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

Sign RealInterval::sign() const {
  if (positive()) return Sign::Positive;
  if (negative()) return Sign::Negative;
  return Sign::Unresolved;
}

double RealInterval::width() const {
  BigFloat w(53);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w.to_double();
}

RealInterval RealInterval::abs() const {
  RealInterval r(precision());
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  mpfr_set_zero(r.lo_.get(), 1);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  if (mpfr_cmp(hi_.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

double RealInterval::mag() const {
  return std::max(std::fabs(mpfr_get_d(lo_.get(), MPFR_RNDU)),
                  std::fabs(mpfr_get_d(hi_.get(), MPFR_RNDU)));
}

RealInterval& RealInterval::operator+=(const RealInterval& o) {
  mpfr_add(lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return *this;
}

RealInterval& RealInterval::operator-=(const RealInterval& o) {
  BigFloat nlo(precision());
  mpfr_sub(nlo.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  lo_ = std::move(nlo);
  return *this;
}

RealInterval& RealInterval::operator*=(const RealInterval& o) {
  long prec = std::max(precision(), o.precision());
  BigFloat d(prec), u(prec), td(prec), tu(prec);
  mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
  mpfr_srcptr b[2] = {o.lo_.get(), o.hi_.get()};
  bool first = true;
  for (auto x : a)
    for (auto y : b) {
      mpfr_mul(td.get(), x, y, MPFR_RNDD);
      mpfr_mul(tu.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(td.get(), d.get()) < 0) mpfr_set(d.get(), td.get(), MPFR_RNDD);
      if (first || mpfr_cmp(tu.get(), u.get()) > 0) mpfr_set(u.get(), tu.get(), MPFR_RNDU);
      first = false;
    }
  lo_ = std::move(d);
  hi_ = std::move(u);
  return *this;
}

RealInterval& RealInterval::inflate(const BigFloat& r) {
  mpfr_sub(lo_.get(), lo_.get(), r.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), r.get(), MPFR_RNDU);
  return *this;
}

RealInterval& RealInterval::inflate(const Rational& r) {
  return inflate(to_big_up(r, precision()));
}

RealInterval operator-(const RealInterval& a) {
  RealInterval r(a.precision());
  mpfr_neg(r.lo().get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
  return r;
}

RealInterval exp(const RealInterval& x) {
  RealInterval r(x.precision());
  mpfr_exp(r.lo().get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp(r.hi().get(), x.hi().get(), MPFR_RNDU);
  return r;
}

namespace {

// f is 1-Lipschitz: f([l,h]) lies in f(l) + [-(h-l), h-l], clipped to [-1,1].
RealInterval lipschitz_trig(const RealInterval& x,
                            int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  long prec = x.precision();
  RealInterval r(prec);
  BigFloat w(prec);
  mpfr_sub(w.get(), x.hi().get(), x.lo().get(), MPFR_RNDU);
  f(r.lo().get(), x.lo().get(), MPFR_RNDD);
  f(r.hi().get(), x.lo().get(), MPFR_RNDU);
  r.inflate(w);
  if (mpfr_cmp_si(r.lo().get(), -1) < 0) mpfr_set_si(r.lo().get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi().get(), 1) > 0) mpfr_set_si(r.hi().get(), 1, MPFR_RNDU);
  return r;
}

}  // namespace

RealInterval cos(const RealInterval& x) { return lipschitz_trig(x, mpfr_cos); }
RealInterval sin(const RealInterval& x) { return lipschitz_trig(x, mpfr_sin); }

RealInterval hull(const RealInterval& a, const RealInterval& b) {
  RealInterval r = a;
  if (mpfr_cmp(b.lo().get(), r.lo().get()) < 0) mpfr_set(r.lo().get(), b.lo().get(), MPFR_RNDD);
  if (mpfr_cmp(b.hi().get(), r.hi().get()) > 0) mpfr_set(r.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

ComplexInterval ComplexInterval::point(const ComplexRational& z, long prec) {
  return ComplexInterval(RealInterval::point(z.re, prec), RealInterval::point(z.im, prec));
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& o) {
  *this = *this * o;
  return *this;
}

ComplexInterval& ComplexInterval::inflate(const BigFloat& r) {
  re.inflate(r);
  im.inflate(r);
  return *this;
}

BigFloat ComplexInterval::mag_upper() const {
  long prec = std::max(re.precision(), im.precision());
  BigFloat a(prec), b(prec);
  RealInterval ra = re.abs(), ia = im.abs();
  mpfr_set(a.get(), ra.hi().get(), MPFR_RNDU);
  mpfr_set(b.get(), ia.hi().get(), MPFR_RNDU);
  mpfr_hypot(a.get(), a.get(), b.get(), MPFR_RNDU);
  return a;
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }

ComplexInterval complex_exp_enclosure(const ComplexRational& alpha, long precision_bits) {
  BigFloat target(64);
  mpfr_set_ui_2exp(target.get(), 1, -precision_bits, MPFR_RNDD);
  double mag_bits = std::max(0.0, to_double(alpha.re) * 1.4427);
  double arg_bits = std::log2(1.0 + std::fabs(to_double(alpha.im)));
  long guard = 8 + static_cast<long>(std::ceil(mag_bits + arg_bits));
  for (int attempt = 0; attempt < 12; ++attempt) {
    long wp = precision_bits + guard;
    RealInterval m = exp(RealInterval::point(alpha.re, wp));
    ComplexInterval out(wp);
    if (sgn(alpha.im) == 0) {
      out.re = m;
      out.im = RealInterval::point(Rational(0), wp);
    } else {
      RealInterval b = RealInterval::point(alpha.im, wp);
      out.re = m * cos(b);
      out.im = m * sin(b);
    }
    BigFloat w1(64), w2(64);
    mpfr_sub(w1.get(), out.re.hi().get(), out.re.lo().get(), MPFR_RNDU);
    mpfr_sub(w2.get(), out.im.hi().get(), out.im.lo().get(), MPFR_RNDU);
    if (mpfr_cmp(w1.get(), target.get()) <= 0 && mpfr_cmp(w2.get(), target.get()) <= 0)
      return out;
    guard *= 2;
  }
  throw std::runtime_error("complex_exp_enclosure: precision target not reached");
}

Sign resolve_sign(const IntervalEvaluator& evaluator,
                  const std::optional<ExactZeroTest>& exact_zero_test,
                  long max_precision_bits) {
  if (exact_zero_test && (*exact_zero_test)()) return Sign::Zero;
  for (long p = 32; p <= max_precision_bits; p *= 2) {
    RealInterval v = evaluator(p);
    if (v.positive()) return Sign::Positive;
    if (v.negative()) return Sign::Negative;
  }
  return Sign::Unresolved;
}

}  // namespace qrr
