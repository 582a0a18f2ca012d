#include "qrr/stl/interval_set.hpp"

#include <algorithm>

namespace qrr {

bool TimeInterval::empty() const {
  int c = compare(lo, hi);
  return c > 0 || (c == 0 && !(lo_closed && hi_closed));
}

bool TimeInterval::contains(const TimePoint& t) const {
  int a = compare(lo, t), b = compare(t, hi);
  return (a < 0 || (a == 0 && lo_closed)) && (b < 0 || (b == 0 && hi_closed));
}

std::string TimeInterval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
         (hi_closed ? "]" : ")");
}

namespace {

enum class Op { Union, Intersect, Subtract };

// Sweep over the sorted distinct endpoints. Element 2k is the point P[k],
// element 2k+1 the open gap (P[k], P[k+1]).
std::vector<TimeInterval> combine(const std::vector<TimeInterval>& A,
                                  const std::vector<TimeInterval>& B, Op op) {
  std::vector<TimePoint> pts;
  for (auto* side : {&A, &B})
    for (auto& iv : *side) {
      pts.push_back(iv.lo);
      pts.push_back(iv.hi);
    }
  if (pts.empty()) return {};
  std::sort(pts.begin(), pts.end(), [](const TimePoint& x, const TimePoint& y) { return compare(x, y) < 0; });
  std::vector<TimePoint> P;
  for (auto& p : pts)
    if (P.empty() || compare(P.back(), p) != 0) P.push_back(p);
  auto index_of = [&](const TimePoint& t) {
    std::size_t lo = 0, hi = P.size();
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (compare(P[mid], t) <= 0) lo = mid; else hi = mid;
    }
    return lo;
  };
  std::size_t m = P.size(), ne = 2 * m - 1;
  auto mark = [&](const std::vector<TimeInterval>& S) {
    std::vector<char> in(ne, 0);
    for (auto& iv : S) {
      std::size_t i = index_of(iv.lo), j = index_of(iv.hi);
      for (std::size_t e = 2 * i; e <= 2 * j; ++e) in[e] = 1;
      if (!iv.lo_closed) in[2 * i] = 0;
      if (!iv.hi_closed) in[2 * j] = 0;
      if (i == j && !(iv.lo_closed && iv.hi_closed)) in[2 * i] = 0;
    }
    return in;
  };
  // Several parts can share an endpoint; re-add closed endpoints afterwards.
  auto mark_all = [&](const std::vector<TimeInterval>& S) {
    std::vector<char> in(ne, 0);
    for (auto& iv : S) {
      std::vector<char> one = mark({iv});
      for (std::size_t e = 0; e < ne; ++e) in[e] |= one[e];
    }
    return in;
  };
  std::vector<char> a = mark_all(A), b = mark_all(B), r(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    switch (op) {
      case Op::Union: r[e] = a[e] || b[e]; break;
      case Op::Intersect: r[e] = a[e] && b[e]; break;
      case Op::Subtract: r[e] = a[e] && !b[e]; break;
    }
  }
  std::vector<TimeInterval> out;
  for (std::size_t e = 0; e < ne;) {
    if (!r[e]) { ++e; continue; }
    std::size_t s = e;
    while (e + 1 < ne && r[e + 1]) ++e;
    TimeInterval iv;
    iv.lo = P[s / 2];
    iv.lo_closed = (s % 2 == 0);
    iv.hi = (e % 2 == 0) ? P[e / 2] : P[(e + 1) / 2];
    iv.hi_closed = (e % 2 == 0);
    out.push_back(std::move(iv));
    ++e;
  }
  return out;
}

}  // namespace

IntervalSet::IntervalSet(const TimeInterval& iv) {
  if (!iv.empty()) parts_.push_back(iv);
}

IntervalSet IntervalSet::from_parts(std::vector<TimeInterval> parts) {
  std::vector<TimeInterval> keep;
  for (auto& p : parts)
    if (!p.empty()) keep.push_back(std::move(p));
  IntervalSet s;
  s.parts_ = combine(keep, {}, Op::Union);
  return s;
}

bool IntervalSet::contains(const TimePoint& t) const {
  for (auto& p : parts_)
    if (p.contains(t)) return true;
  return false;
}

bool IntervalSet::covers(const IntervalSet& o) const { return o.subtract(*this).empty(); }

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  IntervalSet s;
  s.parts_ = combine(parts_, o.parts_, Op::Union);
  return s;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  IntervalSet s;
  if (empty() || o.empty()) return s;
  s.parts_ = combine(parts_, o.parts_, Op::Intersect);
  return s;
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
  if (empty() || o.empty()) return *this;
  IntervalSet s;
  s.parts_ = combine(parts_, o.parts_, Op::Subtract);
  return s;
}

IntervalSet IntervalSet::minkowski_back(const Rational& jlo, const Rational& jhi) const {
  std::vector<TimeInterval> moved;
  for (auto& p : parts_) moved.push_back({p.lo - jhi, p.hi - jlo, p.lo_closed, p.hi_closed});
  return from_parts(std::move(moved));
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += " U ";
    s += parts_[k].to_string();
  }
  return s;
}

}  // namespace qrr
