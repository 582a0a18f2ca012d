#pragma once

#include "qrr/expoly/exp_polynomial.hpp"

#include <memory>
#include <string>

namespace qrr {

// A real exp-polynomial shared by all roots taken from it. `normal` is the
// function scaled so that its first coefficient is 1; roots of functions with
// equal normal forms coincide.
// When `factors` is non-empty, f is their product and signs are taken
// factor-wise.
struct RootFunction {
  explicit RootFunction(ExpPolynomial f,
                        std::vector<std::shared_ptr<const RootFunction>> factors = {});
  DerivBundle bundle;
  std::vector<std::shared_ptr<const RootFunction>> factors;
  ExpPolynomial normal;
  bool exact;
  bool same_zeros(const RootFunction& o) const;
};

// A simple root of f isolated in [lo, hi]: f(lo) and f(hi) are nonzero with
// opposite signs and f is monotone there. Collapses to lo == hi when a
// bisection point is an exact zero.
class RootCell {
 public:
  RootCell(std::shared_ptr<const RootFunction> f, Rational lo, Rational hi, Sign sign_lo);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool collapsed() const { return lo_ == hi_; }
  Sign sign_lo() const { return sign_lo_; }
  const RootFunction& function() const { return *f_; }
  const std::shared_ptr<const RootFunction>& function_ptr() const { return f_; }

  // Halves the bracket; false when the sign at the midpoint is unresolved.
  bool refine();
  // Exact three-way comparison of the root with a rational, -1/0/1;
  // std::nullopt when the sign at q cannot be resolved.
  std::optional<int> compare_with(const Rational& q);
  // The function itself, or for a product the factor that vanishes at the
  // root; null when the factors cannot be told apart.
  const RootFunction* vanishing_function();

 private:
  std::shared_ptr<const RootFunction> f_;
  Rational lo_, hi_;
  Sign sign_lo_;
  const RootFunction* vanishing_ = nullptr;
};

// Either a rational or root + rational offset.
class TimePoint {
 public:
  TimePoint() = default;
  TimePoint(Rational q) : value_(std::move(q)) {}
  TimePoint(long q) : value_(q) {}
  static TimePoint root(std::shared_ptr<RootCell> cell, Rational offset = Rational(0));

  bool is_rational() const { return !cell_ || cell_->collapsed(); }
  // Exact value; requires is_rational().
  Rational value() const;
  const std::shared_ptr<RootCell>& cell() const { return cell_; }
  const Rational& offset() const { return value_; }

  Rational lower() const;
  Rational upper() const;
  double approx() const;
  // Refines the bracket until upper - lower <= width; false if stuck.
  bool refine_to(const Rational& width) const;

  TimePoint operator+(const Rational& d) const;
  TimePoint operator-(const Rational& d) const { return *this + Rational(-d); }

  std::string to_string() const;

 private:
  std::shared_ptr<RootCell> cell_;
  Rational value_;  // the value, or the offset added to the root
};

// -1, 0, 1. Throws UndecidedComparison when the order cannot be certified.
int compare(const TimePoint& a, const TimePoint& b);
inline bool operator<(const TimePoint& a, const TimePoint& b) { return compare(a, b) < 0; }
inline bool operator<=(const TimePoint& a, const TimePoint& b) { return compare(a, b) <= 0; }
inline bool operator==(const TimePoint& a, const TimePoint& b) { return compare(a, b) == 0; }

const TimePoint& min(const TimePoint& a, const TimePoint& b);
const TimePoint& max(const TimePoint& a, const TimePoint& b);

// Sign of g at t; Zero when t is a root of a function with the same zeros.
Sign sign_at(const RootFunction& g, const TimePoint& t, long max_bits = 4096);

}  // namespace qrr
