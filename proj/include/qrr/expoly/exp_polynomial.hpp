#pragma once

#include "qrr/expoly/cpoly.hpp"
#include "qrr/numkernel/interval.hpp"

#include <string>
#include <vector>

namespace qrr {

// beta(t) * exp(alpha t). Inexact terms (from the numeric fallback) stand for
// a sum sum_k beta_k exp(alpha_k t) with every alpha_k within alpha_radius of
// alpha, |sum beta_k - beta| <= beta_radius and sum |beta_k| <= mag.
struct ExpTerm {
  ComplexRational alpha;
  CPoly beta;
  Rational alpha_radius;
  Rational beta_radius;
  Rational mag;

  bool exact() const { return sgn(alpha_radius) == 0 && sgn(beta_radius) == 0; }
};

class ExpPolynomial {
 public:
  ExpPolynomial() = default;
  static ExpPolynomial constant(const ComplexRational& c);
  static ExpPolynomial term(const ComplexRational& beta, const ComplexRational& alpha);
  static ExpPolynomial from_terms(std::vector<ExpTerm> terms);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_exact() const;
  // Identically zero; only ever true for exact representations.
  bool zero_test() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ExpPolynomial derivative() const;
  ExpPolynomial conj() const;
  ExpPolynomial real_part() const;  // (f + conj f) / 2
  ExpPolynomial imag_part() const;  // (f - conj f) / 2i

  ExpPolynomial& operator+=(const ExpPolynomial& o);
  ExpPolynomial& operator-=(const ExpPolynomial& o);
  ExpPolynomial& operator*=(const ComplexRational& s);

  ComplexInterval evaluate(const Rational& t, long prec) const;
  RealInterval evaluate_real(const Rational& t, long prec) const;
  // Exact zero test of the real part at a rational time; requires is_exact().
  bool real_value_is_zero_at(const Rational& t) const;
  Sign eval_sign_at(const Rational& t, long max_precision_bits = 4096) const;

  // Upper bound of |f| on [a, b] (triangle inequality), in MPFR, rounded up.
  BigFloat abs_bound(const Rational& a, const Rational& b, long prec = 64) const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<ExpTerm> terms_;
};

ExpPolynomial operator+(ExpPolynomial a, const ExpPolynomial& b);
ExpPolynomial operator-(ExpPolynomial a, const ExpPolynomial& b);
ExpPolynomial operator-(const ExpPolynomial& a);
ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b);
ExpPolynomial operator*(const ComplexRational& s, ExpPolynomial a);
ExpPolynomial pow(const ExpPolynomial& a, unsigned k);
// Structural equality of exact representations.
bool operator==(const ExpPolynomial& a, const ExpPolynomial& b);

// Number of point evaluations performed by this thread.
std::size_t& evaluation_counter();

struct TimeBox {
  Rational lo, hi;
};

// Rational upper bound of sup |f| over [B.lo, B.hi], tightened by splitting
// into 16 pieces.
Rational sup_abs_bound(const ExpPolynomial& f, const TimeBox& box);

// f together with f' and f'', for centred-form range enclosures.
class DerivBundle {
 public:
  explicit DerivBundle(ExpPolynomial f);
  const ExpPolynomial& f() const { return f_; }
  const ExpPolynomial& d1() const { return d1_; }
  const ExpPolynomial& d2() const { return d2_; }

  // Enclosure of Re f on [a, b].
  RealInterval enclose(const Rational& a, const Rational& b, long prec) const;
  // Enclosure of Re f' on [a, b].
  RealInterval enclose_d1(const Rational& a, const Rational& b, long prec) const;
  Sign sign_at(const Rational& t, long max_bits = 4096) const { return f_.eval_sign_at(t, max_bits); }

 private:
  ExpPolynomial f_, d1_, d2_, d3_;
};

}  // namespace qrr
