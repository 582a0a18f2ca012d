#include "qrr/harness/report.hpp"

#include <sstream>

namespace qrr {

nlohmann::json time_point_to_json(const TimePoint& t) {
  if (t.is_rational()) return {{"exact", to_string(t.value())}, {"approx", t.approx()}};
  t.refine_to(pow2(-40));
  return {{"lower", to_string(t.lower())}, {"upper", to_string(t.upper())}, {"approx", t.approx()}};
}

nlohmann::json interval_set_to_json(const IntervalSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (auto& p : s.parts()) {
    a.push_back({{"lo", time_point_to_json(p.lo)},
                 {"hi", time_point_to_json(p.hi)},
                 {"lo_closed", p.lo_closed},
                 {"hi_closed", p.hi_closed},
                 {"text", p.to_string()}});
  }
  return a;
}

nlohmann::json result_to_json(const CheckResult& r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  j["coverage"] = interval_set_to_json(r.coverage);
  if (r.verdict == Verdict::Holds) {
    nlohmann::json w = nlohmann::json::array();
    for (auto& t : r.witness) w.push_back(time_point_to_json(t));
    j["witness"] = w;
  }
  if (r.verdict == Verdict::Fails) {
    j["uncovered"] = interval_set_to_json(r.uncovered);
    if (r.frontier) j["frontier"] = time_point_to_json(*r.frontier);
  }
  j["work"] = r.work;
  return j;
}

nlohmann::json result_to_json(const SampleResult& r) {
  nlohmann::json j = result_to_json(static_cast<const CheckResult&>(r));
  nlohmann::json rows = nlohmann::json::array();
  for (auto& s : r.trace) {
    nlohmann::json row;
    row["t"] = time_point_to_json(s.t);
    row["truth"] = to_string(s.truth);
    if (s.epsilon) row["epsilon"] = to_string(*s.epsilon);
    if (s.theta) row["theta"] = to_string(*s.theta);
    row["delta"] = s.delta.to_string();
    nlohmann::json ess = nlohmann::json::array();
    for (auto& e : s.essential) ess.push_back(time_point_to_json(e));
    row["essential"] = ess;
    if (s.completion) row["completion"] = true;
    rows.push_back(row);
  }
  j["trace"] = rows;
  return j;
}

std::string format_result(const std::string& method, const CheckResult& r) {
  std::ostringstream os;
  os << method << ": " << to_string(r.verdict) << " (" << r.reason << ")\n";
  os << "  coverage: " << r.coverage.to_string() << "\n";
  if (r.verdict == Verdict::Holds && !r.witness.empty()) {
    os << "  witness:";
    for (auto& t : r.witness) os << " " << t.to_string();
    os << "\n";
  }
  if (r.verdict == Verdict::Fails) os << "  uncovered: " << r.uncovered.to_string() << "\n";
  return os.str();
}

}  // namespace qrr
