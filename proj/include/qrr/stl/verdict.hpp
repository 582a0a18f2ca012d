#pragma once

#include "qrr/stl/interval_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrr {

enum class Verdict { Holds, Fails, Abstain };
std::string to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::Abstain;
  std::string reason;
  // Part of I known to be covered: shifted truth set for isolation, I' for
  // the sample-driven engine.
  IntervalSet coverage;
  // Fails: points of I that provably have no satisfying time in their window.
  IntervalSet uncovered;
  std::optional<TimePoint> frontier;
  std::vector<TimePoint> witness;
  std::size_t work = 0;
};

}  // namespace qrr
