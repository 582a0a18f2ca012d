#include "qrr/expoly/time_point.hpp"

#include "qrr/errors.hpp"

#include <sstream>

namespace qrr {

namespace {

constexpr int kMaxRefinements = 600;

}  // namespace

RootFunction::RootFunction(ExpPolynomial f, std::vector<std::shared_ptr<const RootFunction>> fs)
    : bundle(f), factors(std::move(fs)), exact(f.is_exact()) {
  if (exact && !f.zero_test()) {
    const ExpTerm& first = f.terms().front();
    normal = (ComplexRational(1) / first.beta.lead()) * f;
  }
}

bool RootFunction::same_zeros(const RootFunction& o) const {
  return this == &o || (exact && o.exact && !normal.zero_test() && normal == o.normal);
}

RootCell::RootCell(std::shared_ptr<const RootFunction> f, Rational lo, Rational hi, Sign sign_lo)
    : f_(std::move(f)), lo_(std::move(lo)), hi_(std::move(hi)), sign_lo_(sign_lo) {}

bool RootCell::refine() {
  if (collapsed()) return true;
  Rational m = dyadic_between(lo_, hi_);
  Sign s = f_->bundle.sign_at(m);
  if (s == Sign::Unresolved) return false;
  if (s == Sign::Zero) {
    lo_ = hi_ = m;
  } else if (s == sign_lo_) {
    lo_ = m;
  } else {
    hi_ = m;
  }
  return true;
}

std::optional<int> RootCell::compare_with(const Rational& q) {
  if (collapsed()) return cmp(lo_, q) < 0 ? -1 : (lo_ == q ? 0 : 1);
  if (q <= lo_) return 1;
  if (q >= hi_) return -1;
  Sign s = f_->bundle.sign_at(q);
  if (s == Sign::Unresolved) return std::nullopt;
  if (s == Sign::Zero) return 0;
  // Same sign as at lo: the root lies to the right of q.
  return s == sign_lo_ ? 1 : -1;
}

const RootFunction* RootCell::vanishing_function() {
  if (vanishing_) return vanishing_;
  if (f_->factors.empty()) return vanishing_ = f_.get();
  for (int k = 0; k < kMaxRefinements; ++k) {
    const RootFunction* candidate = nullptr;
    int open = 0;
    for (auto& g : f_->factors) {
      if (collapsed() ? g->bundle.sign_at(lo_) != Sign::Zero : !g->bundle.enclose(lo_, hi_, 64).contains_zero())
        continue;
      candidate = g.get();
      ++open;
    }
    if (open == 1) return vanishing_ = candidate;
    if (collapsed() || !refine()) break;
  }
  return nullptr;
}

TimePoint TimePoint::root(std::shared_ptr<RootCell> cell, Rational offset) {
  TimePoint p;
  p.cell_ = std::move(cell);
  p.value_ = std::move(offset);
  return p;
}

Rational TimePoint::value() const {
  if (!cell_) return value_;
  if (!cell_->collapsed()) throw std::logic_error("TimePoint::value on an irrational root");
  return cell_->lo() + value_;
}

Rational TimePoint::lower() const { return cell_ ? Rational(cell_->lo() + value_) : value_; }
Rational TimePoint::upper() const { return cell_ ? Rational(cell_->hi() + value_) : value_; }

double TimePoint::approx() const { return to_double((lower() + upper()) / 2); }

bool TimePoint::refine_to(const Rational& width) const {
  if (!cell_) return true;
  for (int k = 0; k < kMaxRefinements && cell_->hi() - cell_->lo() > width; ++k)
    if (!cell_->refine()) return false;
  return cell_->hi() - cell_->lo() <= width;
}

TimePoint TimePoint::operator+(const Rational& d) const {
  TimePoint p = *this;
  p.value_ += d;
  return p;
}

std::string TimePoint::to_string() const {
  if (is_rational()) return qrr::to_string(value());
  refine_to(pow2(-44));
  if (is_rational()) return qrr::to_string(value());
  std::ostringstream os;
  os.precision(12);
  os << "root~" << approx();
  return os.str();
}

int compare(const TimePoint& a, const TimePoint& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.value(), b.value());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (b.is_rational()) return -compare(b, a);
  if (a.is_rational()) {
    // rational vs root: compare a - offset_b with the root of b.
    for (int k = 0; k < kMaxRefinements; ++k) {
      auto c = b.cell()->compare_with(a.value() - b.offset());
      if (c) return -*c;
      if (!b.cell()->refine()) break;
      if (b.is_rational()) return compare(a, b);
    }
    throw UndecidedComparison("cannot order a rational against a root");
  }
  const auto& ca = a.cell();
  const auto& cb = b.cell();
  if (ca == cb) {
    int c = cmp(a.offset(), b.offset());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const RootFunction* va = a.offset() == b.offset() ? ca->vanishing_function() : nullptr;
  const RootFunction* vb = va ? cb->vanishing_function() : nullptr;
  bool same = va && vb && va->same_zeros(*vb);
  for (int k = 0; k < kMaxRefinements; ++k) {
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    if (a.upper() <= b.lower()) return -1;
    if (b.upper() <= a.lower()) return 1;
    if (same) {
      // Both brackets hold exactly one zero of the same function; decide
      // whether a's zero lies in the overlap.
      Rational lo = max(a.lower(), b.lower()), hi = min(a.upper(), b.upper());
      auto cl = ca->compare_with(lo - a.offset());
      auto ch = ca->compare_with(hi - a.offset());
      if (cl && ch) {
        if (*cl >= 0 && *ch <= 0) return 0;
        // a's zero is outside the overlap, hence outside b's bracket.
        return *cl < 0 ? -1 : 1;
      }
    }
    RootCell& wider = (ca->hi() - ca->lo() >= cb->hi() - cb->lo()) ? *ca : *cb;
    if (!wider.refine()) {
      RootCell& other = (&wider == ca.get()) ? *cb : *ca;
      if (!other.refine()) break;
    }
  }
  throw UndecidedComparison("cannot separate two roots");
}

const TimePoint& min(const TimePoint& a, const TimePoint& b) { return compare(b, a) < 0 ? b : a; }
const TimePoint& max(const TimePoint& a, const TimePoint& b) { return compare(b, a) > 0 ? b : a; }

Sign sign_at(const RootFunction& g, const TimePoint& t, long max_bits) {
  if (!g.factors.empty()) {
    int prod = 1;
    bool unresolved = false;
    for (auto& f : g.factors) {
      Sign s = sign_at(*f, t, max_bits);
      if (s == Sign::Zero) return Sign::Zero;
      if (s == Sign::Unresolved) unresolved = true;
      else if (s == Sign::Negative) prod = -prod;
    }
    if (unresolved) return Sign::Unresolved;
    return prod > 0 ? Sign::Positive : Sign::Negative;
  }
  if (t.is_rational()) return g.bundle.sign_at(t.value(), max_bits);
  if (sgn(t.offset()) == 0) {
    const RootFunction* v = t.cell()->vanishing_function();
    if (v && g.same_zeros(*v)) return Sign::Zero;
  }
  if (g.bundle.f().zero_test()) return Sign::Zero;
  for (int k = 0; k < 200; ++k) {
    if (t.is_rational()) return g.bundle.sign_at(t.value(), max_bits);
    RealInterval e = g.bundle.enclose(t.lower(), t.upper(), 64);
    if (e.positive()) return Sign::Positive;
    if (e.negative()) return Sign::Negative;
    if (!t.cell()->refine()) break;
  }
  return Sign::Unresolved;
}

}  // namespace qrr
