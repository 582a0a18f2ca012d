#include "qrr/isolation/isolation.hpp"

#include "qrr/errors.hpp"

#include <algorithm>

namespace qrr {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Abstain: return "Abstain";
  }
  return "?";
}

TimePoint IsolatingInterval::point() const {
  if (cell) return TimePoint::root(cell);
  return TimePoint(lo);
}

IntervalSet to_interval_set(const Window& w) {
  return IntervalSet(TimeInterval{TimePoint(w.lo), TimePoint(w.hi), w.lo_closed, w.hi_closed});
}

namespace {

struct Isolator {
  const std::shared_ptr<const RootFunction>& f;
  const IsolationOptions& opts;
  IsolationReport out;

  Sign sign(const Rational& t) { return f->bundle.sign_at(t); }

  void exact_root(const Rational& t) { out.roots.push_back({t, t, true, nullptr}); }

  void run(const Rational& l, const Rational& h, Sign sl, Sign sh, int depth) {
    RealInterval v = f->bundle.enclose(l, h, 64);
    if (!v.contains_zero()) return;
    RealInterval d = f->bundle.enclose_d1(l, h, 64);
    bool monotone = !d.contains_zero();
    if (monotone && sl != Sign::Unresolved && sh != Sign::Unresolved) {
      if (sl == Sign::Zero || sh == Sign::Zero) return;  // the endpoint is the only zero
      if (sl != sh) {
        auto cell = std::make_shared<RootCell>(f, l, h, sl);
        out.roots.push_back({l, h, true, cell});
      }
      return;
    }
    if (depth >= opts.max_depth) {
      out.unresolved.push_back({l, h});
      return;
    }
    Rational m = dyadic_between(l, h);
    Sign sm = sign(m);
    run(l, m, sl, sm, depth + 1);
    if (sm == Sign::Zero) exact_root(m);
    run(m, h, sm, sh, depth + 1);
  }
};

}  // namespace

IsolationReport isolate_all(const std::shared_ptr<const RootFunction>& f, const TimeBox& B,
                            const IsolationOptions& opts) {
  if (f->bundle.f().zero_test()) throw std::invalid_argument("isolate_roots: identically zero function");
  Isolator iso{f, opts, {}};
  Sign sl = iso.sign(B.lo);
  if (sl == Sign::Zero) iso.exact_root(B.lo);
  if (B.lo == B.hi) return iso.out;
  Sign sh = iso.sign(B.hi);
  iso.run(B.lo, B.hi, sl, sh, 0);
  if (sh == Sign::Zero) iso.exact_root(B.hi);
  for (auto& r : iso.out.roots) {
    if (!r.cell) continue;
    while (r.cell->hi() - r.cell->lo() > opts.target_width)
      if (!r.cell->refine()) break;
    r.lo = r.cell->lo();
    r.hi = r.cell->hi();
  }
  return iso.out;
}

std::vector<IsolatingInterval> isolate_roots(const std::shared_ptr<const RootFunction>& f,
                                             const TimeBox& B, const Rational& target_width,
                                             int max_depth) {
  IsolationOptions o;
  o.target_width = target_width;
  o.max_depth = max_depth;
  IsolationReport r = isolate_all(f, B, o);
  if (!r.unresolved.empty())
    throw UnresolvedRegion("sign undecided on [" + to_string(r.unresolved[0].lo) + ", " +
                           to_string(r.unresolved[0].hi) + "]");
  return r.roots;
}

SolutionIntervals solution_intervals(const CompiledAtom& atom, const TimeBox& B,
                                     const IsolationOptions& opts) {
  std::vector<std::shared_ptr<const RootFunction>> fs = atom.factors;
  if (fs.empty()) fs.push_back(atom.phi);
  std::vector<TimePoint> pts{TimePoint(B.lo), TimePoint(B.hi)};
  IntervalSet unknown;
  for (auto& g : fs) {
    if (g->bundle.f().zero_test()) continue;
    IsolationReport rep = isolate_all(g, B, opts);
    for (auto& r : rep.roots) pts.push_back(r.point());
    for (auto& u : rep.unresolved) {
      unknown = unknown.unite(IntervalSet(TimeInterval::closed(TimePoint(u.lo), TimePoint(u.hi))));
      pts.push_back(TimePoint(u.lo));
      pts.push_back(TimePoint(u.hi));
    }
  }
  std::sort(pts.begin(), pts.end(), [](const TimePoint& a, const TimePoint& b) { return compare(a, b) < 0; });
  std::vector<TimePoint> P;
  for (auto& p : pts)
    if (P.empty() || compare(P.back(), p) != 0) P.push_back(p);

  std::vector<TimeInterval> truth, unk;
  auto classify = [&](const TimeInterval& piece, const TimePoint& probe) {
    if (unknown.contains(probe)) return;
    Truth t = atom_truth_at(atom, probe);
    if (t == Truth::True) truth.push_back(piece);
    else if (t == Truth::Unknown) unk.push_back(piece);
  };
  for (std::size_t k = 0; k < P.size(); ++k) {
    classify(TimeInterval::point(P[k]), P[k]);
    if (k + 1 == P.size()) break;
    // A rational strictly between consecutive breakpoints.
    const TimePoint &a = P[k], &b = P[k + 1];
    for (int it = 0; it < 400 && !(a.upper() < b.lower()); ++it) {
      bool ra = a.is_rational() || a.cell()->refine();
      bool rb = b.is_rational() || b.cell()->refine();
      if (!ra && !rb) break;
    }
    if (!(a.upper() < b.lower())) throw UndecidedComparison("breakpoints too close to separate");
    Rational mid = dyadic_between(a.upper(), b.lower());
    classify(TimeInterval::open(a, b), TimePoint(mid));
  }
  SolutionIntervals s;
  s.truth = IntervalSet::from_parts(std::move(truth));
  s.unknown = unknown.unite(IntervalSet::from_parts(std::move(unk)));
  return s;
}

CheckResult decide_by_isolation(const CompiledFormula& f, const Window& I, const Window& J,
                                const IsolationOptions& base) {
  CheckResult res;
  std::size_t work0 = evaluation_counter();
  try {
    TimeBox B = monitoring_horizon(I, J);
    IntervalSet Iset = to_interval_set(I);
    if (Iset.empty()) {
      res.verdict = Verdict::Holds;
      res.reason = "empty outer window";
      return res;
    }
    IsolationOptions opts = base;
    Rational jw = J.hi - J.lo;
    if (sgn(jw) > 0) opts.target_width = min(opts.target_width, jw / 256);
    IntervalSet T(TimeInterval::closed(TimePoint(B.lo), TimePoint(B.hi)));
    IntervalSet P = T;
    for (auto& clause : f.clauses) {
      IntervalSet ct, cp;
      for (auto& atom : clause) {
        SolutionIntervals s = solution_intervals(atom, B, opts);
        ct = ct.unite(s.truth);
        cp = cp.unite(s.truth).unite(s.unknown);
      }
      T = T.intersect(ct);
      P = P.intersect(cp);
    }
    IntervalSet covT = T.minkowski_back(J.lo, J.hi);
    IntervalSet covP = P.minkowski_back(J.lo, J.hi);
    res.coverage = covT.intersect(Iset);
    if (covT.covers(Iset)) {
      res.verdict = Verdict::Holds;
      res.reason = "every time in I reaches a satisfying time within J";
    } else {
      IntervalSet unc = Iset.subtract(covP);
      if (!unc.empty()) {
        res.verdict = Verdict::Fails;
        res.uncovered = unc;
        res.frontier = unc.parts().front().lo;
        res.reason = "no satisfying time within J after " + res.frontier->to_string();
      } else {
        res.verdict = Verdict::Abstain;
        res.reason = "undecided sign regions affect the verdict";
      }
    }
  } catch (const UndecidedComparison& e) {
    res.verdict = Verdict::Abstain;
    res.reason = e.what();
  }
  res.work = evaluation_counter() - work0;
  return res;
}

}  // namespace qrr
