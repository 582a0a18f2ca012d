#pragma once

#include "qrr/numkernel/rational.hpp"
#include "qrr/qmodel/matrix.hpp"

#include <vector>

namespace qrr {

// Univariate polynomial over Q(i), coefficients from the constant term up.
class CPoly {
 public:
  CPoly() = default;
  CPoly(ComplexRational c);
  explicit CPoly(std::vector<ComplexRational> coeffs);
  static CPoly x();
  static CPoly linear_root(const ComplexRational& root);  // x - root

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<ComplexRational>& coeffs() const { return c_; }
  const ComplexRational& operator[](std::size_t k) const { return c_[k]; }
  ComplexRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ComplexRational(); }
  const ComplexRational& lead() const { return c_.back(); }

  ComplexRational operator()(const ComplexRational& x) const;
  CPoly derivative() const;
  CPoly monic() const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const ComplexRational& s);

 private:
  void trim();
  std::vector<ComplexRational> c_;
};

CPoly operator+(CPoly a, const CPoly& b);
CPoly operator-(CPoly a, const CPoly& b);
CPoly operator*(const CPoly& a, const CPoly& b);
CPoly operator*(const ComplexRational& s, CPoly a);
bool operator==(const CPoly& a, const CPoly& b);

// Euclidean division; b must be nonzero.
void divmod(const CPoly& a, const CPoly& b, CPoly& q, CPoly& r);
CPoly gcd(CPoly a, CPoly b);  // monic, or zero
CPoly squarefree_part(const CPoly& p);

CPoly characteristic_polynomial(const CMatrix& m);  // det(xI - m)
CMatrix evaluate_at_matrix(const CPoly& p, const CMatrix& m);

}  // namespace qrr
