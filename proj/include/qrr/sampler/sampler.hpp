#pragma once

#include "qrr/stl/formula.hpp"
#include "qrr/stl/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrr {

// How the left or right end of a neighborhood was obtained.
enum class EdgeRule { Epsilon, Theta, Root, Horizon, Point };
std::string to_string(EdgeRule r);

struct Neighborhood {
  TimeInterval interval;
  std::optional<Rational> epsilon;  // nullopt: unbounded (constant function)
  std::optional<Rational> theta;
  EdgeRule left = EdgeRule::Point, right = EdgeRule::Point;
  Sign sign = Sign::Unresolved;
};

// Sign-invariant neighborhood of a rational sample t for f, given
// sup|f'| <= bound1 and sup|f''| <= bound2 on the horizon. The result is
// clipped to the horizon; closed ends are certified non-zero.
Neighborhood sign_invariant_neighborhood(const std::shared_ptr<const RootFunction>& f, const Rational& t,
                                         const Rational& bound1, const Rational& bound2,
                                         const TimeBox& horizon);
// Same for an arbitrary time point (roots of other functions included).
Neighborhood sign_invariant_neighborhood(const std::shared_ptr<const RootFunction>& f, const TimePoint& t,
                                         const Rational& bound1, const Rational& bound2,
                                         const TimeBox& horizon);

// Samples from a satisfying neighborhood whose windows chain without gaps
// larger than |J|. `delta` must contain `t`.
std::vector<TimePoint> essential_samples(const TimeInterval& delta, const TimePoint& t,
                                         const Window& J);

struct SampleRecord {
  TimePoint t;
  Truth truth = Truth::Unknown;
  TimeInterval delta;
  std::optional<Rational> epsilon, theta;  // of the first atom
  std::vector<TimePoint> essential;
  bool completion = false;  // taken from known satisfying regions
};

struct SamplerOptions {
  std::size_t max_samples = 1000000;
  // Use p - lo and p - hi separately for bounded value ranges.
  bool use_range_factors = false;
  // Overrides the computed derivative bounds for every atom.
  std::optional<std::pair<Rational, Rational>> fixed_bounds;
};

struct SampleResult : CheckResult {
  std::vector<SampleRecord> trace;
};

SampleResult decide_sample_driven(const CompiledFormula& f, const Window& I, const Window& J,
                                  const SamplerOptions& opts = {});

// Independent check of a Holds certificate: every time satisfies the formula
// and the windows [t - sup J, t - inf J] cover I.
bool check_witness(const CompiledFormula& f, const Window& I, const Window& J,
                   const std::vector<TimePoint>& witness, std::string* why = nullptr);

}  // namespace qrr
