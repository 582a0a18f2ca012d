#include "qrr/sampler/sampler.hpp"

#include "qrr/errors.hpp"

namespace qrr {

std::string to_string(EdgeRule r) {
  switch (r) {
    case EdgeRule::Epsilon: return "epsilon";
    case EdgeRule::Theta: return "theta";
    case EdgeRule::Root: return "root";
    case EdgeRule::Horizon: return "horizon";
    case EdgeRule::Point: return "point";
  }
  return "?";
}

namespace {

// Lower bound of |v| for an enclosure excluding zero.
Rational abs_lower(const RealInterval& v) {
  if (v.positive()) return v.lo_rational();
  return -v.hi_rational();
}

// Largest certified lower bound of |f(t)| that is tight to about 2^-50
// relative; zero when the sign cannot be separated from zero.
// Lower bound on |f(t)| refined to relative width 2^-44, with the sign it
// certifies; Unresolved when no evaluation up to give_up bits excludes zero.
std::pair<Rational, Sign> abs_value_lower(const ExpPolynomial& f, const Rational& t, long give_up = 4096) {
  Rational best(0);
  Sign s = Sign::Unresolved;
  for (long prec = 64; prec <= 4096; prec *= 2) {
    RealInterval v = f.evaluate_real(t, prec);
    if (v.contains_zero()) {
      if (s == Sign::Unresolved && prec >= give_up) break;
      continue;
    }
    s = v.positive() ? Sign::Positive : Sign::Negative;
    best = abs_lower(v);
    Rational w = v.hi_rational() - v.lo_rational();
    if (w * pow2(44) <= best) break;
  }
  return {best, s};
}

// x / bound, shrunk so the quotient is strictly below the true ratio, and
// rounded down to a short dyadic.
Rational strict_quotient(const Rational& x, const Rational& bound) {
  Rational q = x / bound;
  if (sgn(q) == 0) return q;
  q *= Rational(1) - pow2(-60);
  long e = 0;
  for (Rational a = q; a < 1; a *= 2) ++e;
  return dyadic_floor(q, e + 64);
}

struct Edge {
  TimePoint at;
  bool closed;
  EdgeRule rule;
};

}  // namespace

Neighborhood sign_invariant_neighborhood(const std::shared_ptr<const RootFunction>& f, const Rational& t,
                                         const Rational& bound1, const Rational& bound2,
                                         const TimeBox& horizon) {
  Neighborhood nb;
  nb.interval = TimeInterval::point(TimePoint(t));
  const ExpPolynomial& g = f->bundle.f();
  // Exact zeros are common at rational samples; hand them to the exact test early.
  auto [fabs, s] = abs_value_lower(g, t, 128);
  if (s == Sign::Unresolved) {
    s = f->bundle.sign_at(t);
    if (s == Sign::Positive || s == Sign::Negative) fabs = abs_value_lower(g, t).first;
  }
  nb.sign = s;
  if (s == Sign::Unresolved) return nb;
  if (s == Sign::Zero) {
    if (g.zero_test()) nb.interval = TimeInterval::closed(TimePoint(horizon.lo), TimePoint(horizon.hi));
    return nb;
  }
  if (sgn(bound1) > 0) nb.epsilon = strict_quotient(fabs, bound1);
  if (sgn(bound2) > 0) nb.theta = strict_quotient(abs_value_lower(f->bundle.d1(), t).first, bound2);

  auto edge = [&](int dir) -> Edge {
    const Rational& limit = dir < 0 ? horizon.lo : horizon.hi;
    auto beyond = [&](const Rational& x) { return dir < 0 ? x <= limit : x >= limit; };
    auto by_epsilon = [&]() -> Edge {
      if (!nb.epsilon) return {TimePoint(limit), true, EdgeRule::Horizon};
      Rational e = t + dir * *nb.epsilon;
      if (beyond(e)) return {TimePoint(limit), true, EdgeRule::Horizon};
      return {TimePoint(e), true, EdgeRule::Epsilon};
    };
    bool use_theta = !nb.theta || (nb.epsilon && *nb.theta > *nb.epsilon);
    if (!use_theta) return by_epsilon();
    bool clipped = !nb.theta;
    Rational a = nb.theta ? Rational(t + dir * *nb.theta) : limit;
    if (beyond(a)) {
      a = limit;
      clipped = true;
    }
    if (a == t) return {TimePoint(t), true, EdgeRule::Horizon};
    Sign sa = f->bundle.sign_at(a);
    if (sa == s) return {TimePoint(a), true, clipped ? EdgeRule::Horizon : EdgeRule::Theta};
    if (sa == Sign::Zero) return {TimePoint(a), false, EdgeRule::Root};
    if (sa == Sign::Unresolved) return by_epsilon();
    // f is monotone between a and t, so the sign change is a simple root.
    std::shared_ptr<RootCell> cell = dir < 0 ? std::make_shared<RootCell>(f, a, t, sa)
                                             : std::make_shared<RootCell>(f, t, a, s);
    return {TimePoint::root(cell), false, EdgeRule::Root};
  };
  Edge l = edge(-1), r = edge(1);
  nb.interval = TimeInterval{l.at, r.at, l.closed, r.closed};
  nb.left = l.rule;
  nb.right = r.rule;
  return nb;
}

Neighborhood sign_invariant_neighborhood(const std::shared_ptr<const RootFunction>& f, const TimePoint& t,
                                         const Rational& bound1, const Rational& bound2,
                                         const TimeBox& horizon) {
  if (t.is_rational()) return sign_invariant_neighborhood(f, t.value(), bound1, bound2, horizon);
  Neighborhood nb;
  nb.interval = TimeInterval::point(t);
  Sign s = sign_at(*f, t);
  nb.sign = s;
  if (s == Sign::Unresolved) return nb;
  if (s == Sign::Zero) {
    if (f->bundle.f().zero_test()) nb.interval = TimeInterval::closed(TimePoint(horizon.lo), TimePoint(horizon.hi));
    return nb;
  }
  // sign_at left the bracket of t narrow enough to exclude zero over it.
  Rational lo = t.lower(), hi = t.upper();
  RealInterval v = f->bundle.enclose(lo, hi, 64);
  if (v.contains_zero()) {
    nb.sign = Sign::Unresolved;
    return nb;
  }
  if (sgn(bound1) == 0) {
    nb.interval = TimeInterval::closed(TimePoint(horizon.lo), TimePoint(horizon.hi));
    nb.left = nb.right = EdgeRule::Horizon;
    return nb;
  }
  Rational eps = strict_quotient(abs_lower(v), bound1);
  nb.epsilon = eps;
  Rational a = lo - eps, b = hi + eps;
  nb.left = a <= horizon.lo ? EdgeRule::Horizon : EdgeRule::Epsilon;
  nb.right = b >= horizon.hi ? EdgeRule::Horizon : EdgeRule::Epsilon;
  nb.interval = TimeInterval::closed(TimePoint(max(a, horizon.lo)), TimePoint(min(b, horizon.hi)));
  return nb;
}

std::vector<TimePoint> essential_samples(const TimeInterval& delta, const TimePoint& t, const Window& J) {
  Rational jw = J.hi - J.lo;
  if (delta.is_point()) return {t};
  bool narrow = false;
  try {
    narrow = compare(delta.hi, delta.lo + jw) <= 0;
  } catch (const UndecidedComparison&) {
  }
  if (narrow || sgn(jw) == 0) return {t};
  // Rational bounds just inside both ends.
  delta.lo.refine_to(jw / 64);
  delta.hi.refine_to(jw / 64);
  Rational lo = delta.lo.upper(), hi = delta.hi.lower();
  Rational w = hi - lo;
  Rational m = min(Rational(jw / 2), Rational(w / 4));
  Rational l = lo + m, u = hi - m;
  std::vector<TimePoint> out;
  if (l >= u) return {TimePoint(l)};
  Rational span = u - l;
  Integer n = span.get_num() * jw.get_den();
  Integer d = span.get_den() * jw.get_num();
  Integer steps = (n + d - 1) / d;
  for (Integer k = 0; k <= steps; ++k) out.emplace_back(Rational(l + span * Rational(k) / Rational(steps)));
  return out;
}

}  // namespace qrr
