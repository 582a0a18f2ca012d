#include "qrr/qmodel/model.hpp"

#include "qrr/errors.hpp"

namespace qrr {

namespace {

bool has_shape(const CMatrix& m, std::size_t n) { return m.rows() == n && m.cols() == n; }

}  // namespace

bool is_projector(const CMatrix& p) { return p.square() && p.is_hermitian() && p * p == p; }

ValidationReport validate_model(const QctmcModel& m) {
  ValidationReport r;
  std::size_t n = m.dim;
  if (n == 0) r.problems.push_back("dimension must be positive");
  if (!has_shape(m.H, n)) r.problems.push_back("H has wrong shape");
  else if (!m.H.is_hermitian()) r.problems.push_back("H is not Hermitian");
  for (std::size_t j = 0; j < m.L.size(); ++j)
    if (!has_shape(m.L[j], n)) r.problems.push_back("L" + std::to_string(j + 1) + " has wrong shape");
  if (!has_shape(m.rho0, n)) {
    r.problems.push_back("rho0 has wrong shape");
  } else {
    if (!m.rho0.is_hermitian()) r.problems.push_back("rho0 is not Hermitian");
    else if (!is_psd(m.rho0)) r.problems.push_back("rho0 is not positive semidefinite");
    if (!(m.rho0.trace() == ComplexRational(1))) r.problems.push_back("rho0 does not have unit trace");
  }
  for (std::size_t j = 0; j < m.projectors.size(); ++j) {
    if (!has_shape(m.projectors[j], n))
      r.problems.push_back("projector " + std::to_string(j + 1) + " has wrong shape");
    else if (!is_projector(m.projectors[j]))
      r.problems.push_back("projector " + std::to_string(j + 1) + " is not an orthogonal projector");
  }
  return r;
}

void require_valid(const QctmcModel& model) {
  auto r = validate_model(model);
  if (!r.ok()) throw ValidationError(r.problems);
}

std::vector<CMatrix> observable_projectors(const QctmcModel& model) {
  if (!model.projectors.empty()) return model.projectors;
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < model.dim; ++i) {
    CMatrix p(model.dim, model.dim);
    p(i, i) = ComplexRational(1);
    out.push_back(std::move(p));
  }
  return out;
}

GoverningMatrix build_governing_matrix(const QctmcModel& m) {
  std::size_t n = m.dim;
  if (!has_shape(m.H, n)) throw DimensionMismatch("H");
  CMatrix id = CMatrix::identity(n);
  const ComplexRational i(Rational(0), Rational(1));
  const ComplexRational half(Rational(1, 2));
  CMatrix M = (-i) * kron(m.H, id) + i * kron(id, transpose(m.H));
  for (const CMatrix& L : m.L) {
    if (!has_shape(L, n)) throw DimensionMismatch("L");
    CMatrix Ls = conj(L);
    M += kron(L, Ls);
    M -= half * kron(dagger(L) * L, id);
    M -= half * kron(id, transpose(L) * Ls);
  }
  return GoverningMatrix{n, std::move(M)};
}

}  // namespace qrr
