#pragma once

#include "qrr/expoly/closed_form.hpp"
#include "qrr/harness/model_io.hpp"
#include "qrr/stl/formula.hpp"

#include <complex>
#include <random>
#include <string>
#include <vector>

namespace qrr::testing {

inline std::string model_path(const std::string& name) { return std::string(QRR_MODELS_DIR) + "/" + name; }

// n/d in canonical form (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline ComplexRational cr(long re, long im = 0, long den = 1) { return {ratio(re, den), ratio(im, den)}; }

// beta * exp(alpha t)
inline ExpPolynomial ep(Rational beta, long are, long aim) {
  return ExpPolynomial::term(ComplexRational(std::move(beta)), cr(are, aim));
}

// Reference trajectory of qc1_bell from rho(0) = |00><00|, written out by hand.
struct ReferenceQc1 {
  ExpPolynomial r00, r03, r30, r33, r11, x1, x2, x3, x4, phi;
};

inline ReferenceQc1 reference_qc1() {
  ReferenceQc1 r;
  auto c = [](long n, long d) { return ExpPolynomial::constant(ComplexRational(ratio(n, d))); };
  r.r00 = c(3, 8) + ep(Rational(1, 4), -2, -2) + ep(Rational(1, 4), -2, 2) + ep(Rational(1, 8), -4, 0);
  r.r03 = c(1, 8) - ep(Rational(1, 4), -2, -2) + ep(Rational(1, 4), -2, 2) - ep(Rational(1, 8), -4, 0);
  r.r30 = c(1, 8) + ep(Rational(1, 4), -2, -2) - ep(Rational(1, 4), -2, 2) - ep(Rational(1, 8), -4, 0);
  r.r33 = c(3, 8) - ep(Rational(1, 4), -2, -2) - ep(Rational(1, 4), -2, 2) + ep(Rational(1, 8), -4, 0);
  r.r11 = c(1, 8) - ep(Rational(1, 8), -4, 0);
  r.x1 = r.r00;
  r.x2 = r.r11;
  r.x3 = r.r11;
  r.x4 = r.r33;
  r.phi = c(-1, 64) - ep(Rational(3, 16), -2, -2) - ep(Rational(3, 16), -2, 2) - ep(Rational(1, 16), -4, -4) -
          ep(Rational(1, 16), -4, 4) - ep(Rational(1, 16), -6, -2) - ep(Rational(1, 16), -6, 2) -
          ep(Rational(11, 32), -4, 0) - ep(Rational(1, 64), -8, 0);
  return r;
}

// Roots of phi = x2 - x1^2 on [0, 3] (mpmath, 40 digits).
inline constexpr double kLambda1 = 0.98736810751259549288;
inline constexpr double kLambda2 = 1.56093620410116316900;

// Exact enclosure [lo, hi] of e^q from the Taylor series with a remainder
// bound, after halving q until |q| <= 1/2.
inline std::pair<Rational, Rational> exp_taylor(const Rational& q, int terms = 40) {
  int halvings = 0;
  Rational x = q;
  while (abs(x) > Rational(1, 2)) {
    x /= 2;
    ++halvings;
  }
  Rational sum(1), term(1);
  for (int k = 1; k <= terms; ++k) {
    term *= x;
    term /= k;
    sum += term;
  }
  // |remainder| <= 2 |x|^(N+1) / (N+1)!
  Rational rem = abs(term * x / (terms + 1)) * 2;
  Rational lo = sum - rem, hi = sum + rem;
  for (int k = 0; k < halvings; ++k) {
    lo *= lo;
    hi *= hi;
  }
  return {lo, hi};
}

using CD = std::complex<long double>;
using DMat = std::vector<std::vector<CD>>;

inline DMat to_dmat(const CMatrix& m) {
  DMat d(m.rows(), std::vector<CD>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      d[i][j] = CD(to_double(m(i, j).re), to_double(m(i, j).im));
  return d;
}

inline DMat mul(const DMat& a, const DMat& b) {
  std::size_t n = a.size();
  DMat c(n, std::vector<CD>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline DMat dag(const DMat& a) {
  std::size_t n = a.size();
  DMat c(n, std::vector<CD>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

inline DMat axpy(const DMat& a, CD s, const DMat& b) {
  DMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += s * b[i][j];
  return c;
}

// Lindblad right-hand side in operator form.
inline DMat lindblad_rhs(const DMat& H, const std::vector<DMat>& L, const DMat& rho) {
  const CD I(0, 1);
  DMat out = axpy(mul(H, rho), -1, mul(rho, H));
  for (auto& row : out)
    for (auto& v : row) v *= -I;
  for (auto& l : L) {
    DMat ld = dag(l), ldl = mul(ld, l);
    out = axpy(out, 1, mul(mul(l, rho), ld));
    out = axpy(out, -0.5L, mul(ldl, rho));
    out = axpy(out, -0.5L, mul(rho, ldl));
  }
  return out;
}

// Classical RK4 on the density operator; independent of the governing matrix.
inline DMat integrate_rk4(const QctmcModel& m, long double t, int steps = 4000) {
  DMat H = to_dmat(m.H), rho = to_dmat(m.rho0);
  std::vector<DMat> L;
  for (auto& l : m.L) L.push_back(to_dmat(l));
  long double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    DMat k1 = lindblad_rhs(H, L, rho);
    DMat k2 = lindblad_rhs(H, L, axpy(rho, h / 2, k1));
    DMat k3 = lindblad_rhs(H, L, axpy(rho, h / 2, k2));
    DMat k4 = lindblad_rhs(H, L, axpy(rho, h, k3));
    for (std::size_t i = 0; i < rho.size(); ++i)
      for (std::size_t j = 0; j < rho.size(); ++j)
        rho[i][j] += h / 6 * (k1[i][j] + 2.0L * k2[i][j] + 2.0L * k3[i][j] + k4[i][j]);
  }
  return rho;
}

// Symbolic Lindblad residual d/dt rho - L(rho), entry by entry.
inline std::vector<ExpPolynomial> lindblad_residual(const QctmcModel& m, const SymbolicState& st) {
  std::size_t n = m.dim;
  auto prod = [&](const CMatrix& a, const std::vector<ExpPolynomial>& r) {
    std::vector<ExpPolynomial> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!a(i, k).is_zero()) out[i * n + j] += a(i, k) * r[k * n + j];
    return out;
  };
  auto prod_r = [&](const std::vector<ExpPolynomial>& r, const CMatrix& a) {
    std::vector<ExpPolynomial> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!a(k, j).is_zero()) out[i * n + j] += a(k, j) * r[i * n + k];
    return out;
  };
  std::vector<ExpPolynomial> res(n * n);
  for (std::size_t k = 0; k < n * n; ++k) res[k] = st.entries[k].derivative();
  auto Hr = prod(m.H, st.entries), rH = prod_r(st.entries, m.H);
  for (std::size_t k = 0; k < n * n; ++k) res[k] += ComplexRational(0, 1) * (Hr[k] - rH[k]);
  for (auto& l : m.L) {
    CMatrix ld = dagger(l), ldl = ld * l;
    auto a = prod_r(prod(l, st.entries), ld);
    auto b = prod(ldl, st.entries), c = prod_r(st.entries, ldl);
    for (std::size_t k = 0; k < n * n; ++k) {
      res[k] -= a[k];
      res[k] += ComplexRational(Rational(1, 2)) * (b[k] + c[k]);
    }
  }
  return res;
}

// Value at t = 0.
inline ComplexRational at_zero(const ExpPolynomial& f) {
  ComplexRational s;
  for (auto& t : f.terms()) s += t.beta.coeff(0);
  return s;
}

// Random model whose governing matrix splits over Q(i): non-interacting
// qubits with diagonal Hamiltonians, decay and dephasing, conjugated by a
// Gaussian-rational unitary.
inline QctmcModel random_solvable_model(std::mt19937_64& rng, std::size_t qubits) {
  std::uniform_int_distribution<int> small(-3, 3), rate(1, 3);
  CMatrix H, Lsum;
  std::vector<CMatrix> Ls;
  std::size_t n = std::size_t(1) << qubits;
  H = CMatrix(n, n);
  for (std::size_t q = 0; q < qubits; ++q) {
    auto embed = [&](const CMatrix& op) {
      CMatrix out = CMatrix::identity(1);
      for (std::size_t k = 0; k < qubits; ++k) out = kron(out, k == q ? op : CMatrix::identity(2));
      return out;
    };
    CMatrix h(2, 2);
    h(0, 0) = cr(small(rng));
    h(1, 1) = cr(small(rng));
    H += embed(h);
    CMatrix decay(2, 2);
    decay(0, 1) = cr(rate(rng));
    Ls.push_back(embed(decay));
    CMatrix deph(2, 2);
    deph(1, 1) = cr(0, rate(rng));
    Ls.push_back(embed(deph));
  }
  // Gaussian-rational unitaries: phase Hadamard and a swap-like permutation.
  CMatrix had(2, 2);
  ComplexRational c(Rational(1, 2), Rational(1, 2));
  had(0, 0) = c;
  had(0, 1) = c;
  had(1, 0) = c;
  had(1, 1) = -c;
  CMatrix U = CMatrix::identity(1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t q = 0; q < qubits; ++q) U = kron(U, coin(rng) ? had : CMatrix::identity(2));
  if (qubits == 2 && coin(rng)) {
    CMatrix cnot(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = cr(1);
    U = cnot * U;
  }
  CMatrix Ud = dagger(U);
  QctmcModel m;
  m.dim = n;
  m.H = U * H * Ud;
  for (auto& l : Ls) m.L.push_back(U * l * Ud);
  // rho0: random diagonal mixture in a rotated basis.
  std::uniform_int_distribution<int> w(0, 4);
  std::vector<int> ws(n);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : ws) total += (x = w(rng));
  }
  CMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = ComplexRational(ratio(ws[i], total));
  CMatrix V = coin(rng) ? kron(had, CMatrix::identity(n / 2)) : CMatrix::identity(n);
  m.rho0 = V * d * dagger(V);
  return m;
}

}  // namespace qrr::testing
