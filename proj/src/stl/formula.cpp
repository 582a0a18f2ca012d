#include "qrr/stl/formula.hpp"

#include "qrr/errors.hpp"

#include <algorithm>

namespace qrr {

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (sgn(c) != 0) p.terms_[{}] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::size_t index) {
  MultiPoly p;
  Monomial m(index + 1, 0);
  m[index] = 1;
  p.terms_[m] = Rational(1);
  return p;
}

namespace {

MultiPoly::Monomial trimmed(MultiPoly::Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

}  // namespace

void MultiPoly::add_term(Monomial m, const Rational& c) {
  m = trimmed(std::move(m));
  Rational& slot = terms_[m];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(m);
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (auto& [m, c] : terms_) {
    unsigned s = 0;
    for (unsigned e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::size_t MultiPoly::variable_count() const {
  std::size_t n = 0;
  for (auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

Rational MultiPoly::height() const {
  Rational h;
  for (auto& [m, c] : terms_) h = max(h, abs(c));
  return h;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) terms_.clear();
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      MultiPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
      for (std::size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly r = MultiPoly::constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& x) const {
  Rational s;
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (unsigned e = 0; e < m[k]; ++e) t *= x.at(k);
    s += t;
  }
  return s;
}

ExpPolynomial MultiPoly::evaluate(const std::vector<ExpPolynomial>& x) const {
  std::vector<std::vector<ExpPolynomial>> powers(x.size());
  auto power = [&](std::size_t k, unsigned e) -> const ExpPolynomial& {
    auto& pk = powers[k];
    if (pk.empty()) pk.push_back(ExpPolynomial::constant(ComplexRational(1)));
    while (pk.size() <= e) pk.push_back(pk.back() * x[k]);
    return pk[e];
  };
  std::vector<ExpTerm> all;
  for (auto& [m, c] : terms_) {
    if (m.size() > x.size()) throw DimensionMismatch("polynomial uses an undefined variable");
    ExpPolynomial t = ExpPolynomial::constant(ComplexRational(c));
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k]) t = t * power(k, m[k]);
    all.insert(all.end(), t.terms().begin(), t.terms().end());
  }
  return ExpPolynomial::from_terms(std::move(all));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest degree first reads more naturally.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](auto& a, auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a.first) da += e;
    for (unsigned e : b.first) db += e;
    return da > db;
  });
  for (auto& [m, c] : ordered) {
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    bool has_var = false;
    for (unsigned e : m) has_var = has_var || e;
    std::string coef = qrr::to_string(a);
    if (!has_var) { s += coef; continue; }
    if (a != 1) s += (a.get_den() == 1 ? coef : "(" + coef + ")") + "*";
    bool first_var = true;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (!m[k]) continue;
      if (!first_var) s += "*";
      first_var = false;
      s += "x" + std::to_string(k + 1);
      if (m[k] > 1) s += "^" + std::to_string(m[k]);
    }
  }
  return s;
}

bool ValueRange::contains(const Rational& v) const {
  if (lo && (v < *lo || (v == *lo && !lo_closed))) return false;
  if (hi && (v > *hi || (v == *hi && !hi_closed))) return false;
  return true;
}

std::string ValueRange::to_string() const {
  if (lo && hi)
    return std::string("in ") + (lo_closed ? "[" : "(") + qrr::to_string(*lo) + ", " +
           qrr::to_string(*hi) + (hi_closed ? "]" : ")");
  if (lo) return std::string(lo_closed ? ">= " : "> ") + qrr::to_string(*lo);
  if (hi) return std::string(hi_closed ? "<= " : "< ") + qrr::to_string(*hi);
  return "in R";
}

std::string SignalAtom::to_string() const { return poly.to_string() + " " + range.to_string(); }

std::size_t CnfFormula::atom_count() const {
  std::size_t n = 0;
  for (auto& c : clauses) n += c.size();
  return n;
}

std::string CnfFormula::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) s += " & ";
    s += "(";
    for (std::size_t j = 0; j < clauses[i].size(); ++j) {
      if (j) s += " | ";
      s += clauses[i][j].to_string();
    }
    s += ")";
  }
  return s;
}

std::string Window::to_string() const {
  return std::string(lo_closed ? "[" : "(") + qrr::to_string(lo) + ", " + qrr::to_string(hi) +
         (hi_closed ? "]" : ")");
}

TimeBox monitoring_horizon(const Window& I, const Window& J) {
  if (!J.lo_closed || !J.hi_closed) throw UnboundedHorizon("the inner window J must be closed");
  if (J.lo > J.hi) throw UnboundedHorizon("the inner window J is empty");
  if (sgn(I.lo) < 0 || sgn(J.lo) < 0) throw UnboundedHorizon("time windows must be non-negative");
  return TimeBox{I.lo + J.lo, I.hi + J.hi};
}

std::string to_string(SignCondition c) {
  switch (c) {
    case SignCondition::StrictlyPositive: return "StrictlyPositive";
    case SignCondition::NonNegative: return "NonNegative";
    case SignCondition::StrictlyNegative: return "StrictlyNegative";
    case SignCondition::NonPositive: return "NonPositive";
  }
  return "?";
}

bool satisfies(Sign s, SignCondition c) {
  switch (c) {
    case SignCondition::StrictlyPositive: return s == Sign::Positive;
    case SignCondition::NonNegative: return s == Sign::Positive || s == Sign::Zero;
    case SignCondition::StrictlyNegative: return s == Sign::Negative;
    case SignCondition::NonPositive: return s == Sign::Negative || s == Sign::Zero;
  }
  return false;
}

std::vector<const CompiledAtom*> CompiledFormula::atoms() const {
  std::vector<const CompiledAtom*> out;
  for (auto& c : clauses)
    for (auto& a : c) out.push_back(&a);
  return out;
}

std::vector<ExpPolynomial> observables(const QctmcModel& model, const SymbolicState& state) {
  std::vector<ExpPolynomial> x;
  for (auto& P : observable_projectors(model)) x.push_back(trace_observable(P, state));
  return x;
}

CompiledAtom compile_atom(const SignalAtom& atom, const std::vector<ExpPolynomial>& x) {
  CompiledAtom c;
  c.atom = atom;
  c.value = atom.poly.evaluate(x);
  const ValueRange& r = atom.range;
  auto shifted = [&](const Rational& v) { return c.value - ExpPolynomial::constant(ComplexRational(v)); };
  if (r.lo && r.hi) {
    auto flo = std::make_shared<const RootFunction>(shifted(*r.lo));
    auto fhi = std::make_shared<const RootFunction>(shifted(*r.hi));
    c.factors = {flo, fhi};
    c.phi = std::make_shared<const RootFunction>(flo->bundle.f() * fhi->bundle.f(), c.factors);
    c.condition = (!r.lo_closed && !r.hi_closed) ? SignCondition::StrictlyNegative : SignCondition::NonPositive;
  } else if (r.lo) {
    c.phi = std::make_shared<const RootFunction>(shifted(*r.lo));
    c.condition = r.lo_closed ? SignCondition::NonNegative : SignCondition::StrictlyPositive;
  } else if (r.hi) {
    c.phi = std::make_shared<const RootFunction>(shifted(*r.hi));
    c.condition = r.hi_closed ? SignCondition::NonPositive : SignCondition::StrictlyNegative;
  } else {
    c.phi = std::make_shared<const RootFunction>(ExpPolynomial::constant(ComplexRational(1)));
    c.condition = SignCondition::StrictlyPositive;
  }
  return c;
}

CompiledFormula compile_formula(const CnfFormula& f, const std::vector<ExpPolynomial>& x) {
  CompiledFormula out;
  for (auto& clause : f.clauses) {
    std::vector<CompiledAtom> cs;
    for (auto& a : clause) cs.push_back(compile_atom(a, x));
    out.clauses.push_back(std::move(cs));
  }
  return out;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::False: return "False";
    case Truth::True: return "True";
    case Truth::Unknown: return "Unknown";
  }
  return "?";
}

Truth atom_truth_at(const CompiledAtom& a, const TimePoint& t) {
  Sign s = sign_at(*a.phi, t);
  if (s == Sign::Unresolved) return Truth::Unknown;
  if (s == Sign::Zero && a.factors.size() == 2) {
    // p sits on a boundary of the range; closedness decides.
    Sign slo = sign_at(*a.factors[0], t), shi = sign_at(*a.factors[1], t);
    if (slo == Sign::Unresolved || shi == Sign::Unresolved) return Truth::Unknown;
    const ValueRange& r = a.atom.range;
    bool ok_lo = slo == Sign::Positive || (slo == Sign::Zero && r.lo_closed);
    bool ok_hi = shi == Sign::Negative || (shi == Sign::Zero && r.hi_closed);
    return ok_lo && ok_hi ? Truth::True : Truth::False;
  }
  return satisfies(s, a.condition) ? Truth::True : Truth::False;
}

Truth formula_truth_at(const CompiledFormula& f, const TimePoint& t) {
  bool unknown = false;
  for (auto& clause : f.clauses) {
    bool sat = false, cu = false;
    for (auto& a : clause) {
      Truth v = atom_truth_at(a, t);
      if (v == Truth::True) { sat = true; break; }
      if (v == Truth::Unknown) cu = true;
    }
    if (sat) continue;
    if (!cu) return Truth::False;
    unknown = true;
  }
  return unknown ? Truth::Unknown : Truth::True;
}

}  // namespace qrr
