#pragma once

#include "qrr/qmodel/model.hpp"

#include <json.hpp>

#include <string>

namespace qrr {

// {"dim": n, "H": [[cr]], "L": [[[cr]]], "rho0": [[cr]], "projectors": [...]}
// where cr is a complex-rational string such as "1/2-1/2i". Throws
// SchemaError on malformed input; physical validity is checked separately.
QctmcModel model_from_json(const nlohmann::json& j);
QctmcModel load_model(const std::string& path);
nlohmann::json model_to_json(const QctmcModel& m);

}  // namespace qrr
