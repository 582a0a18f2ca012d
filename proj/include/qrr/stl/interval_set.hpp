#pragma once

#include "qrr/expoly/time_point.hpp"

#include <string>
#include <vector>

namespace qrr {

struct TimeInterval {
  TimePoint lo, hi;
  bool lo_closed = true, hi_closed = true;

  static TimeInterval closed(TimePoint a, TimePoint b) { return {std::move(a), std::move(b), true, true}; }
  static TimeInterval open(TimePoint a, TimePoint b) { return {std::move(a), std::move(b), false, false}; }
  static TimeInterval point(const TimePoint& p) { return {p, p, true, true}; }

  bool empty() const;
  bool contains(const TimePoint& t) const;
  bool is_point() const { return lo_closed && hi_closed && compare(lo, hi) == 0; }
  // hi - lo, from bracket bounds.
  double approx_width() const { return hi.approx() - lo.approx(); }
  std::string to_string() const;
};

// Finite union of pairwise disjoint, non-adjacent intervals in increasing
// order.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(const TimeInterval& iv);
  static IntervalSet from_parts(std::vector<TimeInterval> parts);

  const std::vector<TimeInterval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const TimePoint& t) const;
  bool covers(const IntervalSet& other) const;  // other subset of *this

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet subtract(const IntervalSet& o) const;

  // { t1 - t2 : t1 in this, t2 in [jlo, jhi] }
  IntervalSet minkowski_back(const Rational& jlo, const Rational& jhi) const;

  std::string to_string() const;

 private:
  std::vector<TimeInterval> parts_;
};

}  // namespace qrr
