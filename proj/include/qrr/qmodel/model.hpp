#pragma once

#include "qrr/qmodel/matrix.hpp"

#include <string>
#include <vector>

namespace qrr {

struct QctmcModel {
  std::size_t dim = 0;
  CMatrix H;
  std::vector<CMatrix> L;
  CMatrix rho0;
  // Projectors bound to x1, x2, ...; empty means the computational basis.
  std::vector<CMatrix> projectors;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate_model(const QctmcModel& model);
void require_valid(const QctmcModel& model);

// Projectors used for x_i: the model's own list or |i><i|.
std::vector<CMatrix> observable_projectors(const QctmcModel& model);
bool is_projector(const CMatrix& p);

struct GoverningMatrix {
  std::size_t dim = 0;
  CMatrix M;  // dim^2 x dim^2, acts on the row-major vectorisation
};

GoverningMatrix build_governing_matrix(const QctmcModel& model);

}  // namespace qrr
