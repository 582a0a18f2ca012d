#include "qrr/expoly/cpoly.hpp"

#include "qrr/errors.hpp"

namespace qrr {

CPoly::CPoly(ComplexRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

CPoly::CPoly(std::vector<ComplexRational> coeffs) : c_(std::move(coeffs)) { trim(); }

CPoly CPoly::x() { return CPoly(std::vector<ComplexRational>{ComplexRational(), ComplexRational(1)}); }

CPoly CPoly::linear_root(const ComplexRational& root) {
  return CPoly(std::vector<ComplexRational>{-root, ComplexRational(1)});
}

void CPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ComplexRational CPoly::operator()(const ComplexRational& x) const {
  ComplexRational acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

CPoly CPoly::derivative() const {
  std::vector<ComplexRational> d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(c_[k] * ComplexRational(static_cast<long>(k)));
  return CPoly(std::move(d));
}

CPoly CPoly::monic() const {
  if (c_.empty()) return *this;
  CPoly m = *this;
  ComplexRational l = lead();
  for (auto& z : m.c_) z /= l;
  return m;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

CPoly& CPoly::operator*=(const ComplexRational& s) {
  for (auto& z : c_) z = z * s;
  trim();
  return *this;
}

CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
CPoly operator*(const ComplexRational& s, CPoly a) { return a *= s; }

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return CPoly();
  std::vector<ComplexRational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[i] * b[j];
  return CPoly(std::move(c));
}

bool operator==(const CPoly& a, const CPoly& b) { return a.coeffs() == b.coeffs(); }

void divmod(const CPoly& a, const CPoly& b, CPoly& q, CPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<ComplexRational> rem = a.coeffs();
  int db = b.degree();
  std::vector<ComplexRational> quo(rem.size() > static_cast<std::size_t>(db) ? rem.size() - db : 0);
  ComplexRational inv = ComplexRational(1) / b.lead();
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    if (rem[k].is_zero()) continue;
    ComplexRational f = rem[k] * inv;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b[j];
  }
  q = CPoly(std::move(quo));
  r = CPoly(std::move(rem));
}

CPoly gcd(CPoly a, CPoly b) {
  while (!b.is_zero()) {
    CPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

CPoly squarefree_part(const CPoly& p) {
  if (p.degree() <= 0) return p.monic();
  CPoly g = gcd(p, p.derivative());
  CPoly q, r;
  divmod(p, g, q, r);
  return q.monic();
}

CPoly characteristic_polynomial(const CMatrix& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::size_t n = m.rows();
  if (!m.square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  std::vector<ComplexRational> c(n + 1);
  c[n] = ComplexRational(1);
  CMatrix Mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mk = m * Mk;
    for (std::size_t i = 0; i < n; ++i) Mk(i, i) += c[n - k + 1];
    CMatrix AM = m * Mk;
    c[n - k] = -(AM.trace() / ComplexRational(static_cast<long>(k)));
  }
  return CPoly(std::move(c));
}

CMatrix evaluate_at_matrix(const CPoly& p, const CMatrix& m) {
  std::size_t n = m.rows();
  CMatrix acc(n, n);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p[k];
  }
  return acc;
}

}  // namespace qrr
