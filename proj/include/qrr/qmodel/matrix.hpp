#pragma once

#include "qrr/numkernel/rational.hpp"

#include <cstddef>
#include <vector>

namespace qrr {

// Dense row-major matrix over Q(i).
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static CMatrix identity(std::size_t n);
  // Column vector from entries.
  static CMatrix column(std::vector<ComplexRational> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  ComplexRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const ComplexRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<ComplexRational>& data() const { return a_; }
  std::vector<ComplexRational>& data() { return a_; }

  bool is_zero() const;
  bool is_hermitian() const;
  ComplexRational trace() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(const ComplexRational& s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ComplexRational> a_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const ComplexRational& s, CMatrix a);
bool operator==(const CMatrix& a, const CMatrix& b);

CMatrix transpose(const CMatrix& a);
CMatrix conj(const CMatrix& a);
CMatrix dagger(const CMatrix& a);
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Row-major vectorisation: entry (i, j) goes to index i*n + j.
std::vector<ComplexRational> vectorize(const CMatrix& a);
CMatrix devectorize(const std::vector<ComplexRational>& v, std::size_t n);

std::vector<ComplexRational> mat_vec(const CMatrix& a, const std::vector<ComplexRational>& v);

// Exact check for a Hermitian matrix being positive semidefinite.
bool is_psd(const CMatrix& hermitian);

}  // namespace qrr
