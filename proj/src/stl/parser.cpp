#include "qrr/errors.hpp"
#include "qrr/stl/formula.hpp"

#include <cctype>

namespace qrr {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Query query() {
    Query q;
    expect_word("G");
    q.I = window();
    expect_word("F");
    q.J = window();
    q.formula = formula();
    end();
    return q;
  }

  CnfFormula formula_only() {
    CnfFormula f = formula();
    end();
    return f;
  }

  Window window_only() {
    Window w = window();
    end();
    return w;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect_word(const std::string& w) {
    if (!accept_word(w)) fail("expected '" + w + "'");
  }
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos_); }
  void end() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  Rational number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("expected a number");
    std::string lit = s_.substr(start, pos_ - start);
    std::size_t save = pos_;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size()) {
      std::size_t p2 = pos_ + 1;
      while (p2 < s_.size() && std::isspace(static_cast<unsigned char>(s_[p2]))) ++p2;
      std::size_t d0 = p2;
      while (p2 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p2]))) ++p2;
      if (p2 > d0) {
        lit += "/" + s_.substr(d0, p2 - d0);
        pos_ = p2;
        save = pos_;
      }
    }
    pos_ = save;
    try {
      return parse_rational(lit);
    } catch (const std::exception&) {
      throw SyntaxError("bad number '" + lit + "'", start);
    }
  }

  Rational signed_number() {
    bool neg = false;
    while (true) {
      if (accept('-')) neg = !neg;
      else if (!accept('+')) break;
    }
    Rational v = number();
    return neg ? Rational(-v) : v;
  }

  Window window() {
    Window w;
    char open = peek();
    if (open != '[' && open != '(') fail("expected '[' or '('");
    ++pos_;
    w.lo_closed = open == '[';
    w.lo = signed_number();
    expect(',');
    skip();
    if (accept_word("inf") || accept_word("oo")) throw UnboundedHorizon("unbounded time window");
    w.hi = signed_number();
    char close = peek();
    if (close != ']' && close != ')') fail("expected ']' or ')'");
    ++pos_;
    w.hi_closed = close == ']';
    if (w.lo > w.hi) throw SyntaxError("window lower end exceeds upper end", pos_);
    return w;
  }

  CnfFormula formula() {
    CnfFormula f;
    f.clauses.push_back(clause());
    while (accept('&')) f.clauses.push_back(clause());
    return f;
  }

  std::vector<SignalAtom> clause() {
    // A parenthesised group may be a clause or a parenthesised polynomial.
    if (peek() == '(') {
      std::size_t save = pos_;
      try {
        ++pos_;
        std::vector<SignalAtom> c = disjunction();
        expect(')');
        char n = peek();
        if (n == '&' || n == '\0' || n == ')') return c;
      } catch (const SyntaxError&) {
      }
      pos_ = save;
    }
    return disjunction();
  }

  std::vector<SignalAtom> disjunction() {
    std::vector<SignalAtom> c;
    c.push_back(atom());
    while (accept('|')) c.push_back(atom());
    return c;
  }

  SignalAtom atom() {
    SignalAtom a;
    MultiPoly lhs = poly();
    if (accept_word("in")) {
      Window w = window();
      a.poly = lhs;
      a.range.lo = w.lo;
      a.range.hi = w.hi;
      a.range.lo_closed = w.lo_closed;
      a.range.hi_closed = w.hi_closed;
      return a;
    }
    std::string op;
    if (accept_word(">=")) op = ">=";
    else if (accept_word("<=")) op = "<=";
    else if (accept_word(">")) op = ">";
    else if (accept_word("<")) op = "<";
    else fail("expected a comparison");
    MultiPoly rhs = poly();
    a.poly = lhs - rhs;
    if (op[0] == '>') {
      a.range.lo = Rational(0);
      a.range.lo_closed = op.size() == 2;
    } else {
      a.range.hi = Rational(0);
      a.range.hi_closed = op.size() == 2;
    }
    return a;
  }

  MultiPoly poly() {
    MultiPoly p;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    MultiPoly t = term();
    p = neg ? MultiPoly() - t : t;
    while (true) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else break;
    }
    return p;
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(' || c == '.';
  }

  MultiPoly term() {
    MultiPoly t = factor();
    while (true) {
      if (accept('*')) {
        t = t * factor();
      } else if (starts_factor()) {
        t = t * factor();
      } else {
        break;
      }
    }
    return t;
  }

  MultiPoly factor() {
    MultiPoly base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = poly();
      expect(')');
    } else if (c == 'x') {
      ++pos_;
      accept('_');
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a variable index");
      unsigned long idx = std::stoul(s_.substr(start, pos_ - start));
      if (idx == 0) throw SyntaxError("variables are numbered from x1", start);
      base = MultiPoly::variable(idx - 1);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      base = MultiPoly::constant(number());
    } else {
      fail("expected a number, variable or '('");
    }
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CnfFormula parse_formula(const std::string& text) { return Parser(text).formula_only(); }
Query parse_query(const std::string& text) { return Parser(text).query(); }
Window parse_window(const std::string& text) { return Parser(text).window_only(); }

}  // namespace qrr
