#include "qrr/harness/model_io.hpp"

#include "qrr/errors.hpp"

#include <fstream>

namespace qrr {

namespace {

ComplexRational entry(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_complex_rational(v.get<std::string>());
    if (v.is_number_integer()) return ComplexRational(Rational(v.get<long>()));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + ": expected a complex-rational string");
}

CMatrix matrix(const nlohmann::json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw SchemaError(where + ": expected " + std::to_string(n) + " rows");
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_array() || v[i].size() != n)
      throw SchemaError(where + ": row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = entry(v[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

nlohmann::json matrix_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

QctmcModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("model must be a JSON object");
  for (const char* key : {"dim", "H", "L", "rho0"})
    if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() <= 0)
    throw SchemaError("'dim' must be a positive integer");
  QctmcModel m;
  m.dim = j["dim"].get<std::size_t>();
  m.H = matrix(j["H"], m.dim, "H");
  if (!j["L"].is_array()) throw SchemaError("'L' must be an array of matrices");
  for (std::size_t k = 0; k < j["L"].size(); ++k)
    m.L.push_back(matrix(j["L"][k], m.dim, "L[" + std::to_string(k) + "]"));
  m.rho0 = matrix(j["rho0"], m.dim, "rho0");
  if (j.contains("projectors")) {
    if (!j["projectors"].is_array()) throw SchemaError("'projectors' must be an array of matrices");
    for (std::size_t k = 0; k < j["projectors"].size(); ++k)
      m.projectors.push_back(matrix(j["projectors"][k], m.dim, "projectors[" + std::to_string(k) + "]"));
  }
  return m;
}

QctmcModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("model file is not valid JSON: ") + e.what());
  }
  return model_from_json(j);
}

nlohmann::json model_to_json(const QctmcModel& m) {
  nlohmann::json j;
  j["dim"] = m.dim;
  j["H"] = matrix_json(m.H);
  j["L"] = nlohmann::json::array();
  for (auto& L : m.L) j["L"].push_back(matrix_json(L));
  j["rho0"] = matrix_json(m.rho0);
  if (!m.projectors.empty()) {
    j["projectors"] = nlohmann::json::array();
    for (auto& p : m.projectors) j["projectors"].push_back(matrix_json(p));
  }
  return j;
}

}  // namespace qrr
