#pragma once

#include "qrr/sampler/sampler.hpp"

#include <json.hpp>

namespace qrr {

nlohmann::json time_point_to_json(const TimePoint& t);
nlohmann::json interval_set_to_json(const IntervalSet& s);
nlohmann::json result_to_json(const CheckResult& r);
// Adds the sample trace: one object per sample with t, truth, delta, epsilon, theta.
nlohmann::json result_to_json(const SampleResult& r);
std::string format_result(const std::string& method, const CheckResult& r);

}  // namespace qrr
