#pragma once

#include "qrr/stl/formula.hpp"
#include "qrr/stl/verdict.hpp"

#include <memory>
#include <vector>

namespace qrr {

struct IsolatingInterval {
  Rational lo, hi;              // lo == hi for an exact rational root
  bool certified_unique = true;
  std::shared_ptr<RootCell> cell;  // null for exact roots
  TimePoint point() const;
};

struct IsolationReport {
  std::vector<IsolatingInterval> roots;            // increasing
  std::vector<TimeBox> unresolved;                  // regions left undecided
};

struct IsolationOptions {
  Rational target_width = pow2(-20);
  int max_depth = 64;
};

// All zeros of f in [B.lo, B.hi], with regions that could not be decided.
IsolationReport isolate_all(const std::shared_ptr<const RootFunction>& f, const TimeBox& B,
                            const IsolationOptions& opts = {});
// As above but throws UnresolvedRegion if any region stays undecided.
std::vector<IsolatingInterval> isolate_roots(const std::shared_ptr<const RootFunction>& f,
                                             const TimeBox& B, const Rational& target_width,
                                             int max_depth = 64);

// Three-valued: `truth` where the atom certainly holds, `unknown` where the
// sign could not be decided.
struct SolutionIntervals {
  IntervalSet truth;
  IntervalSet unknown;
};

SolutionIntervals solution_intervals(const CompiledAtom& atom, const TimeBox& B,
                                     const IsolationOptions& opts = {});

CheckResult decide_by_isolation(const CompiledFormula& f, const Window& I, const Window& J,
                                const IsolationOptions& opts = {});

IntervalSet to_interval_set(const Window& w);

}  // namespace qrr
