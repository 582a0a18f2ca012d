#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qrr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  std::vector<std::string> problems;
  explicit ValidationError(std::vector<std::string> p);
};

struct DimensionMismatch : Error { using Error::Error; };
struct DefectiveGenerator : Error { using Error::Error; };
struct EigenvalueNotGaussianRational : Error { using Error::Error; };
struct NotAProjector : Error { using Error::Error; };
struct UnboundedHorizon : Error { using Error::Error; };
struct UnresolvedRegion : Error { using Error::Error; };
struct UndecidedComparison : Error { using Error::Error; };
struct DegenerateNeighborhood : Error { using Error::Error; };
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos);
};
struct SchemaError : Error { using Error::Error; };

inline ValidationError::ValidationError(std::vector<std::string> p)
    : Error([&] {
        std::string s = "invalid model:";
        for (auto& x : p) s += " " + x + ";";
        return s;
      }()),
      problems(std::move(p)) {}

inline SyntaxError::SyntaxError(const std::string& what, std::size_t pos)
    : Error(what + " at offset " + std::to_string(pos)), position(pos) {}

}  // namespace qrr
