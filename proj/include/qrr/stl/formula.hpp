#pragma once

#include "qrr/expoly/closed_form.hpp"
#include "qrr/expoly/time_point.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qrr {

// Polynomial with rational coefficients in x1..xn (stored 0-based).
class MultiPoly {
 public:
  using Monomial = std::vector<unsigned>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(std::size_t index);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  std::size_t variable_count() const;  // 1 + highest variable index used
  // Largest |coefficient|.
  Rational height() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const std::vector<Rational>& x) const;
  ExpPolynomial evaluate(const std::vector<ExpPolynomial>& x) const;
  std::string to_string() const;

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

// Admissible values of p: lower and/or upper bound with closedness.
struct ValueRange {
  std::optional<Rational> lo, hi;
  bool lo_closed = false, hi_closed = false;
  bool contains(const Rational& v) const;
  std::string to_string() const;
};

struct SignalAtom {
  MultiPoly poly;
  ValueRange range;
  std::string to_string() const;
};

struct CnfFormula {
  std::vector<std::vector<SignalAtom>> clauses;
  std::size_t atom_count() const;
  std::string to_string() const;
};

struct Window {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;
  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  std::string to_string() const;
};

// G_I F_J formula
struct Query {
  Window I, J;
  CnfFormula formula;
};

// [inf I + inf J, sup I + sup J]; J must be closed.
TimeBox monitoring_horizon(const Window& I, const Window& J);

enum class SignCondition { StrictlyPositive, NonNegative, StrictlyNegative, NonPositive };
std::string to_string(SignCondition c);
bool satisfies(Sign s, SignCondition c);

struct CompiledAtom {
  SignalAtom atom;
  ExpPolynomial value;                                  // p(x(t))
  std::shared_ptr<const RootFunction> phi;             // observing expression
  std::vector<std::shared_ptr<const RootFunction>> factors;  // p - lo, p - hi
  SignCondition condition = SignCondition::StrictlyPositive;
};

struct CompiledFormula {
  std::vector<std::vector<CompiledAtom>> clauses;
  std::vector<const CompiledAtom*> atoms() const;
};

std::vector<ExpPolynomial> observables(const QctmcModel& model, const SymbolicState& state);
CompiledAtom compile_atom(const SignalAtom& atom, const std::vector<ExpPolynomial>& x);
CompiledFormula compile_formula(const CnfFormula& f, const std::vector<ExpPolynomial>& x);

enum class Truth { False, True, Unknown };
std::string to_string(Truth t);
Truth atom_truth_at(const CompiledAtom& a, const TimePoint& t);
Truth formula_truth_at(const CompiledFormula& f, const TimePoint& t);

// Parsing; errors are SyntaxError with an offset.
CnfFormula parse_formula(const std::string& text);
Query parse_query(const std::string& text);
Window parse_window(const std::string& text);

}  // namespace qrr
