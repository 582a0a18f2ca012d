#include "qrr/expoly/exp_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qrr {

namespace {

Rational term_mag(const ExpTerm& t) {
  if (!t.exact()) return t.mag;
  Rational m;
  for (auto& c : t.beta.coeffs()) m += modulus_upper(c);
  return m;
}

ComplexRational const_beta(const ExpTerm& t) {
  if (!t.beta.is_constant())
    throw std::logic_error("inexact exp-polynomial term with non-constant coefficient");
  return t.beta.coeff(0);
}

bool balls_overlap(const ExpTerm& a, const ExpTerm& b) {
  Rational r = a.alpha_radius + b.alpha_radius;
  return norm2(a.alpha - b.alpha) <= r * r;
}

bool term_vanishes(const ExpTerm& t) {
  return t.beta.is_zero() && sgn(t.beta_radius) == 0 &&
         (sgn(t.alpha_radius) == 0 || sgn(t.mag) == 0);
}

// Hull of a group of pairwise-chained overlapping balls.
ExpTerm merge_group(const std::vector<ExpTerm>& g) {
  std::size_t widest = 0;
  for (std::size_t k = 1; k < g.size(); ++k)
    if (g[k].alpha_radius > g[widest].alpha_radius) widest = k;
  ExpTerm out;
  out.alpha = g[widest].alpha;
  ComplexRational b;
  for (auto& t : g) {
    Rational reach = modulus_upper(t.alpha - out.alpha) + t.alpha_radius;
    if (reach > out.alpha_radius) out.alpha_radius = reach;
    b += const_beta(t);
    out.beta_radius += t.beta_radius;
    out.mag += term_mag(t);
  }
  out.beta = CPoly(b);
  return out;
}

}  // namespace

ExpPolynomial ExpPolynomial::constant(const ComplexRational& c) { return term(c, ComplexRational()); }

ExpPolynomial ExpPolynomial::term(const ComplexRational& beta, const ComplexRational& alpha) {
  ExpPolynomial p;
  if (!beta.is_zero()) p.terms_.push_back(ExpTerm{alpha, CPoly(beta), {}, {}, {}});
  return p;
}

ExpPolynomial ExpPolynomial::from_terms(std::vector<ExpTerm> terms) {
  ExpPolynomial p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

bool ExpPolynomial::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return t.exact(); });
}

void ExpPolynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return a.alpha < b.alpha; });
  std::vector<ExpTerm> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().alpha == t.alpha) {
      ExpTerm& o = out.back();
      if (o.exact() && t.exact()) {
        o.beta += t.beta;
      } else {
        ExpTerm m = merge_group({o, t});
        o = std::move(m);
      }
      continue;
    }
    out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), term_vanishes), out.end());
  bool any_inexact = std::any_of(out.begin(), out.end(), [](const ExpTerm& t) { return !t.exact(); });
  if (any_inexact && out.size() > 1) {
    std::vector<std::size_t> parent(out.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool merged = false;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (out[i].exact() && out[j].exact()) continue;
        if (balls_overlap(out[i], out[j])) {
          parent[find(i)] = find(j);
          merged = true;
        }
      }
    if (merged) {
      std::vector<std::vector<ExpTerm>> groups(out.size());
      for (std::size_t i = 0; i < out.size(); ++i) groups[find(i)].push_back(out[i]);
      std::vector<ExpTerm> res;
      for (auto& g : groups) {
        if (g.empty()) continue;
        res.push_back(g.size() == 1 ? g[0] : merge_group(g));
      }
      std::sort(res.begin(), res.end(),
                [](const ExpTerm& a, const ExpTerm& b) { return a.alpha < b.alpha; });
      res.erase(std::remove_if(res.begin(), res.end(), term_vanishes), res.end());
      out = std::move(res);
    }
  }
  terms_ = std::move(out);
}

ExpPolynomial ExpPolynomial::derivative() const {
  std::vector<ExpTerm> d;
  for (auto& t : terms_) {
    ExpTerm n;
    n.alpha = t.alpha;
    n.alpha_radius = t.alpha_radius;
    if (t.exact()) {
      n.beta = t.beta.derivative() + t.alpha * t.beta;
    } else {
      Rational cm = modulus_upper(t.alpha);
      n.beta = t.alpha * t.beta;
      n.beta_radius = cm * t.beta_radius + t.alpha_radius * t.mag;
      n.mag = (cm + t.alpha_radius) * t.mag;
    }
    d.push_back(std::move(n));
  }
  return from_terms(std::move(d));
}

ExpPolynomial ExpPolynomial::conj() const {
  std::vector<ExpTerm> c;
  for (auto& t : terms_) {
    ExpTerm n = t;
    n.alpha = qrr::conj(t.alpha);
    std::vector<ComplexRational> cs;
    for (auto& z : t.beta.coeffs()) cs.push_back(qrr::conj(z));
    n.beta = CPoly(std::move(cs));
    c.push_back(std::move(n));
  }
  return from_terms(std::move(c));
}

ExpPolynomial ExpPolynomial::real_part() const {
  return ComplexRational(Rational(1, 2)) * (*this + conj());
}

ExpPolynomial ExpPolynomial::imag_part() const {
  return ComplexRational(Rational(0), Rational(-1, 2)) * (*this - conj());
}

ExpPolynomial& ExpPolynomial::operator+=(const ExpPolynomial& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

ExpPolynomial& ExpPolynomial::operator-=(const ExpPolynomial& o) { return *this += -o; }

ExpPolynomial& ExpPolynomial::operator*=(const ComplexRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  Rational sm = modulus_upper(s);
  for (auto& t : terms_) {
    t.beta *= s;
    t.beta_radius *= sm;
    t.mag *= sm;
  }
  canonicalize();
  return *this;
}

ExpPolynomial operator+(ExpPolynomial a, const ExpPolynomial& b) { return a += b; }
ExpPolynomial operator-(ExpPolynomial a, const ExpPolynomial& b) { return a -= b; }
ExpPolynomial operator-(const ExpPolynomial& a) { return ComplexRational(-1) * a; }
ExpPolynomial operator*(const ComplexRational& s, ExpPolynomial a) { return a *= s; }

ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b) {
  std::vector<ExpTerm> out;
  out.reserve(a.size() * b.size());
  for (auto& x : a.terms())
    for (auto& y : b.terms()) {
      ExpTerm n;
      n.alpha = x.alpha + y.alpha;
      n.alpha_radius = x.alpha_radius + y.alpha_radius;
      n.beta = x.beta * y.beta;
      if (!(x.exact() && y.exact())) {
        Rational bx = modulus_upper(const_beta(x)), by = modulus_upper(const_beta(y));
        n.beta_radius = bx * y.beta_radius + by * x.beta_radius + x.beta_radius * y.beta_radius;
        n.mag = term_mag(x) * term_mag(y);
      }
      out.push_back(std::move(n));
    }
  return ExpPolynomial::from_terms(std::move(out));
}

ExpPolynomial pow(const ExpPolynomial& a, unsigned k) {
  ExpPolynomial r = ExpPolynomial::constant(ComplexRational(1));
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

bool operator==(const ExpPolynomial& a, const ExpPolynomial& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto& x = a.terms()[k];
    auto& y = b.terms()[k];
    if (!(x.alpha == y.alpha) || !(x.beta == y.beta) || x.alpha_radius != y.alpha_radius ||
        x.beta_radius != y.beta_radius)
      return false;
  }
  return true;
}

std::size_t& evaluation_counter() {
  thread_local std::size_t n = 0;
  return n;
}

ComplexInterval ExpPolynomial::evaluate(const Rational& t, long prec) const {
  ++evaluation_counter();
  long extra = 4;
  for (std::size_t n = terms_.size(); n > 1; n >>= 1) ++extra;
  ComplexInterval acc = ComplexInterval::point(ComplexRational(), prec + extra);
  Rational at = abs(t);
  for (auto& term : terms_) {
    ComplexRational b = term.beta(ComplexRational(t));
    long bbits = 0;
    if (!b.is_zero()) {
      double bm = std::max(std::fabs(to_double(b.re)), std::fabs(to_double(b.im)));
      if (bm > 1) bbits = static_cast<long>(std::ceil(std::log2(bm))) + 1;
    }
    long p = prec + extra + bbits;
    ComplexRational z = term.alpha * ComplexRational(t);
    ComplexInterval e = complex_exp_enclosure(z, p);
    ComplexInterval v = b.is_zero() ? ComplexInterval::point(ComplexRational(), p)
                                    : e * ComplexInterval::point(b, p);
    if (!term.exact()) {
      // |e^{ct}| (s + mag (e^{r|t|} - 1))
      BigFloat growth = to_big_up(term.alpha_radius * at, 64);
      mpfr_expm1(growth.get(), growth.get(), MPFR_RNDU);
      BigFloat slack = to_big_up(term.mag, 64);
      mpfr_mul(slack.get(), slack.get(), growth.get(), MPFR_RNDU);
      BigFloat br = to_big_up(term.beta_radius, 64);
      mpfr_add(slack.get(), slack.get(), br.get(), MPFR_RNDU);
      BigFloat scale = to_big_up(z.re, 64);
      mpfr_exp(scale.get(), scale.get(), MPFR_RNDU);
      mpfr_mul(slack.get(), slack.get(), scale.get(), MPFR_RNDU);
      v.inflate(slack);
    }
    acc += v;
  }
  return acc;
}

RealInterval ExpPolynomial::evaluate_real(const Rational& t, long prec) const {
  return evaluate(t, prec).re;
}

bool ExpPolynomial::real_value_is_zero_at(const Rational& t) const {
  if (!is_exact()) throw std::logic_error("exact zero test on an inexact exp-polynomial");
  ExpPolynomial r = (*this == conj()) ? *this : real_part();
  ComplexRational ct(t);
  if (sgn(t) == 0) {
    ComplexRational s;
    for (auto& term : r.terms_) s += term.beta(ct);
    return s.is_zero();
  }
  // Exponents alpha*t are pairwise distinct algebraic numbers, so the value
  // vanishes only if every coefficient does.
  for (auto& term : r.terms_)
    if (!term.beta(ct).is_zero()) return false;
  return true;
}

Sign ExpPolynomial::eval_sign_at(const Rational& t, long max_precision_bits) const {
  std::optional<ExactZeroTest> zt;
  if (is_exact()) zt = [this, &t] { return real_value_is_zero_at(t); };
  return resolve_sign([this, &t](long p) { return evaluate_real(t, p); }, zt, max_precision_bits);
}

BigFloat ExpPolynomial::abs_bound(const Rational& a, const Rational& b, long prec) const {
  BigFloat total(prec);
  Rational T = max(abs(a), abs(b));
  BigFloat tmp(prec), e(prec);
  for (auto& term : terms_) {
    Rational coef;
    Rational lo_re = term.alpha.re - term.alpha_radius, hi_re = term.alpha.re + term.alpha_radius;
    if (term.exact()) {
      Rational Tk(1);
      for (auto& c : term.beta.coeffs()) {
        coef += modulus_upper(c) * Tk;
        Tk *= T;
      }
    } else {
      coef = term.mag;
    }
    Rational ex = max(max(lo_re * a, lo_re * b), max(hi_re * a, hi_re * b));
    e = to_big_up(ex, prec);
    mpfr_exp(e.get(), e.get(), MPFR_RNDU);
    tmp = to_big_up(coef, prec);
    mpfr_mul(tmp.get(), tmp.get(), e.get(), MPFR_RNDU);
    mpfr_add(total.get(), total.get(), tmp.get(), MPFR_RNDU);
  }
  return total;
}

std::string ExpPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(";
    for (std::size_t k = 0; k < t.beta.coeffs().size(); ++k) {
      if (k) os << " + ";
      os << qrr::to_string(t.beta[k]);
      if (k == 1) os << "*t";
      if (k > 1) os << "*t^" << k;
    }
    if (t.beta.is_zero()) os << "0";
    os << ")";
    if (!t.exact()) os << "[+-" << qrr::to_double(t.beta_radius) << "]";
    if (!t.alpha.is_zero() || !t.exact()) {
      os << "*exp((" << qrr::to_string(t.alpha) << ")t";
      if (!t.exact()) os << " +- " << qrr::to_double(t.alpha_radius);
      os << ")";
    }
  }
  return os.str();
}

Rational sup_abs_bound(const ExpPolynomial& f, const TimeBox& box) {
  const int pieces = 16;
  const long prec = 32;
  // Piece-independent data: summed coefficient moduli per exponent range, so
  // each piece needs one exp per distinct real part rather than per term.
  struct Part {
    Rational lo_re, hi_re;
    std::vector<Rational> mod;
  };
  std::vector<Part> parts;
  for (auto& term : f.terms()) {
    Rational lo = term.alpha.re - term.alpha_radius, hi = term.alpha.re + term.alpha_radius;
    auto it = std::find_if(parts.begin(), parts.end(), [&](const Part& p) { return p.lo_re == lo && p.hi_re == hi; });
    if (it == parts.end()) it = parts.insert(parts.end(), Part{lo, hi, {}});
    std::vector<Rational> m;
    if (term.exact())
      for (auto& c : term.beta.coeffs()) m.push_back(modulus_upper(c, prec));
    else
      m.push_back(term.mag);
    if (it->mod.size() < m.size()) it->mod.resize(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) it->mod[k] += m[k];
  }
  Rational w = (box.hi - box.lo) / pieces;
  std::vector<Rational> at(pieces + 1);
  for (int j = 0; j <= pieces; ++j) at[j] = j == pieces ? box.hi : box.lo + w * j;
  std::vector<BigFloat> T, total(pieces, BigFloat(prec));
  for (int k = 0; k < pieces; ++k) T.push_back(to_big_up(max(abs(at[k]), abs(at[k + 1])), prec));
  auto exp_up = [&](const Rational& x) {
    BigFloat e = to_big_up(x, prec);
    mpfr_exp(e.get(), e.get(), MPFR_RNDU);
    return e;
  };
  BigFloat coef(prec), Tk(prec), tmp(prec);
  for (auto& p : parts) {
    // Upper bounds on e^{re t} at the piece endpoints. Equal spacing turns
    // them into a geometric sequence when the real part is exact.
    std::vector<BigFloat> E;
    if (p.lo_re == p.hi_re) {
      E.push_back(exp_up(p.lo_re * at[0]));
      BigFloat step = exp_up(p.lo_re * w);
      for (int j = 1; j <= pieces; ++j) {
        E.push_back(BigFloat(prec));
        mpfr_mul(E[j].get(), E[j - 1].get(), step.get(), MPFR_RNDU);
      }
    } else {
      for (int j = 0; j <= pieces; ++j) E.push_back(exp_up(max(p.lo_re * at[j], p.hi_re * at[j])));
    }
    std::vector<BigFloat> mod;
    for (auto& m : p.mod) mod.push_back(to_big_up(m, prec));
    for (int k = 0; k < pieces; ++k) {
      mpfr_set_zero(coef.get(), 1);
      mpfr_set_ui(Tk.get(), 1, MPFR_RNDU);
      for (auto& m : mod) {
        mpfr_mul(tmp.get(), m.get(), Tk.get(), MPFR_RNDU);
        mpfr_add(coef.get(), coef.get(), tmp.get(), MPFR_RNDU);
        mpfr_mul(Tk.get(), Tk.get(), T[k].get(), MPFR_RNDU);
      }
      const BigFloat& e = mpfr_cmp(E[k].get(), E[k + 1].get()) >= 0 ? E[k] : E[k + 1];
      mpfr_mul(tmp.get(), coef.get(), e.get(), MPFR_RNDU);
      mpfr_add(total[k].get(), total[k].get(), tmp.get(), MPFR_RNDU);
    }
  }
  BigFloat best(prec);
  for (auto& v : total)
    if (mpfr_cmp(v.get(), best.get()) > 0) best = v;
  return best.to_rational();
}

DerivBundle::DerivBundle(ExpPolynomial f)
    : f_(std::move(f)), d1_(f_.derivative()), d2_(d1_.derivative()), d3_(d2_.derivative()) {}

namespace {

RealInterval centred(const ExpPolynomial& f, const ExpPolynomial& d1, const ExpPolynomial& d2,
                     const Rational& a, const Rational& b, long prec) {
  Rational m = (a + b) / 2;
  RealInterval v = f.evaluate_real(m, prec);
  if (a == b) return v;
  Rational rad = (b - a) / 2;
  BigFloat r = to_big_up(rad, 64);
  BigFloat w1 = d1.abs_bound(a, b);
  mpfr_mul(w1.get(), w1.get(), r.get(), MPFR_RNDU);
  // |f'(m)| rad + sup|f''| rad^2 / 2
  RealInterval dm = d1.evaluate_real(m, 64);
  BigFloat w2(64);
  mpfr_set(w2.get(), dm.abs().hi().get(), MPFR_RNDU);
  mpfr_mul(w2.get(), w2.get(), r.get(), MPFR_RNDU);
  BigFloat q = d2.abs_bound(a, b);
  mpfr_mul(q.get(), q.get(), r.get(), MPFR_RNDU);
  mpfr_mul(q.get(), q.get(), r.get(), MPFR_RNDU);
  mpfr_div_2ui(q.get(), q.get(), 1, MPFR_RNDU);
  mpfr_add(w2.get(), w2.get(), q.get(), MPFR_RNDU);
  v.inflate(mpfr_cmp(w1.get(), w2.get()) < 0 ? w1 : w2);
  return v;
}

}  // namespace

RealInterval DerivBundle::enclose(const Rational& a, const Rational& b, long prec) const {
  return centred(f_, d1_, d2_, a, b, prec);
}

RealInterval DerivBundle::enclose_d1(const Rational& a, const Rational& b, long prec) const {
  return centred(d1_, d2_, d3_, a, b, prec);
}

}  // namespace qrr
