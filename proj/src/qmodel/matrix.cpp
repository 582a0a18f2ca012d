#include "qrr/qmodel/matrix.hpp"

#include "qrr/errors.hpp"

namespace qrr {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ComplexRational(1);
  return m;
}

CMatrix CMatrix::column(std::vector<ComplexRational> v) {
  CMatrix m(v.size(), 1);
  m.a_ = std::move(v);
  return m;
}

bool CMatrix::is_zero() const {
  for (auto& z : a_)
    if (!z.is_zero()) return false;
  return true;
}

bool CMatrix::is_hermitian() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (!((*this)(i, j) == conj((*this)(j, i)))) return false;
  return true;
}

ComplexRational CMatrix::trace() const {
  ComplexRational t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(const ComplexRational& s) {
  for (auto& z : a_) z = z * s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(const ComplexRational& s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ComplexRational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

CMatrix transpose(const CMatrix& a) {
  CMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

CMatrix conj(const CMatrix& a) {
  CMatrix c = a;
  for (auto& z : c.data()) z = conj(z);
  return c;
}

CMatrix dagger(const CMatrix& a) { return conj(transpose(a)); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

std::vector<ComplexRational> vectorize(const CMatrix& a) { return a.data(); }

CMatrix devectorize(const std::vector<ComplexRational>& v, std::size_t n) {
  if (v.size() != n * n) throw DimensionMismatch("devectorize");
  CMatrix m(n, n);
  m.data() = v;
  return m;
}

std::vector<ComplexRational> mat_vec(const CMatrix& a, const std::vector<ComplexRational>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product");
  std::vector<ComplexRational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

bool is_psd(const CMatrix& h) {
  CMatrix a = h;
  std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Rational piv = a(k, k).re;
    if (sgn(piv) < 0) return false;
    if (sgn(piv) == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(k, j).is_zero()) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      ComplexRational f = a(i, k) / ComplexRational(piv);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace qrr
