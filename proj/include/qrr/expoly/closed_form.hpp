#pragma once

#include "qrr/expoly/exp_polynomial.hpp"
#include "qrr/qmodel/model.hpp"

#include <vector>

namespace qrr {

struct ClosedFormOptions {
  // Enclose non-Gaussian-rational eigenvalues numerically instead of failing.
  bool allow_fallback = false;
  long fallback_bits = 192;
};

// rho(t) entry-wise; entries[i*dim + j] is <i|rho(t)|j>.
struct SymbolicState {
  std::size_t dim = 0;
  std::vector<ExpPolynomial> entries;
  bool exact = true;
  const ExpPolynomial& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

struct Eigenvalue {
  ComplexRational center;
  Rational radius;  // zero for exact eigenvalues
};

struct SpectralData {
  CPoly characteristic;
  CPoly squarefree;
  std::vector<Eigenvalue> eigenvalues;  // distinct
  bool split = true;                    // all eigenvalues exact
};

SpectralData spectral_data(const CMatrix& M, const ClosedFormOptions& opts = {});

SymbolicState closed_form_solution(const QctmcModel& model, const ClosedFormOptions& opts = {});
SymbolicState closed_form_solution(const GoverningMatrix& gm, const CMatrix& rho0,
                                   const ClosedFormOptions& opts = {});

// tr(P rho(t)); P must be an orthogonal projector. The result is real-valued
// (self-conjugate).
ExpPolynomial trace_observable(const CMatrix& P, const SymbolicState& state);

}  // namespace qrr
