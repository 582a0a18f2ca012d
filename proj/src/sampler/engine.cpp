#include "qrr/sampler/sampler.hpp"

#include "qrr/errors.hpp"
#include "qrr/isolation/isolation.hpp"

#include <map>

namespace qrr {

namespace {

// Intersection and hull of two intervals that share a point.
TimeInterval meet(const TimeInterval& a, const TimeInterval& b) {
  TimeInterval r = a;
  int cl = compare(a.lo, b.lo);
  if (cl < 0 || (cl == 0 && !b.lo_closed)) { r.lo = b.lo; r.lo_closed = b.lo_closed; }
  int ch = compare(a.hi, b.hi);
  if (ch > 0 || (ch == 0 && !b.hi_closed)) { r.hi = b.hi; r.hi_closed = b.hi_closed; }
  return r;
}

TimeInterval join(const TimeInterval& a, const TimeInterval& b) {
  TimeInterval r = a;
  int cl = compare(a.lo, b.lo);
  if (cl > 0 || (cl == 0 && b.lo_closed)) { r.lo = b.lo; r.lo_closed = b.lo_closed; }
  int ch = compare(a.hi, b.hi);
  if (ch < 0 || (ch == 0 && b.hi_closed)) { r.hi = b.hi; r.hi_closed = b.hi_closed; }
  return r;
}

// A rational strictly between a < b, near the middle.
Rational rational_between(const TimePoint& a, const TimePoint& b) {
  Rational w = b.upper() - a.lower();
  for (int k = 2; k < 400; ++k) {
    Rational step = w * pow2(-k);
    a.refine_to(step);
    b.refine_to(step);
    if (a.upper() < b.lower()) return dyadic_between(a.upper(), b.lower());
  }
  throw UndecidedComparison("cannot separate " + a.to_string() + " and " + b.to_string());
}

// True when every point just right of q belongs to X.
bool right_of(const IntervalSet& X, const TimePoint& q) {
  for (auto& p : X.parts()) {
    if (compare(p.lo, q) <= 0 && compare(q, p.hi) < 0) return true;
  }
  return false;
}

const TimeInterval* part_containing(const IntervalSet& X, const TimePoint& t) {
  for (auto& p : X.parts())
    if (p.contains(t)) return &p;
  return nullptr;
}

struct Evaluation {
  Truth truth = Truth::Unknown;
  TimeInterval delta;
  std::optional<Rational> epsilon, theta;
};

class Engine {
 public:
  Engine(const CompiledFormula& f, const Window& I, const Window& J, const SamplerOptions& opts)
      : f_(f), I_(I), J_(J), opts_(opts), H_(monitoring_horizon(I, J)) {}

  SampleResult run();

 private:
  std::pair<Rational, Rational> bounds(const std::shared_ptr<const RootFunction>& g);
  Neighborhood neighborhood(const std::shared_ptr<const RootFunction>& g, const TimePoint& t);
  TimeInterval atom_delta(const CompiledAtom& a, const TimePoint& t, Evaluation& ev, bool& first);
  Evaluation evaluate(const TimePoint& t);
  // Returns false when the run must stop.
  bool explore(const TimePoint& t);
  void add_completion(const TimePoint& t);
  SampleResult finish(Verdict v, std::string why);

  const CompiledFormula& f_;
  Window I_, J_;
  SamplerOptions opts_;
  TimeBox H_;
  std::map<const RootFunction*, std::pair<Rational, Rational>> bounds_;
  IntervalSet B_, S_, cov_;
  SampleResult res_;
  std::string stop_;
};

std::pair<Rational, Rational> Engine::bounds(const std::shared_ptr<const RootFunction>& g) {
  if (opts_.fixed_bounds) return *opts_.fixed_bounds;
  auto it = bounds_.find(g.get());
  if (it != bounds_.end()) return it->second;
  auto b = std::make_pair(sup_abs_bound(g->bundle.d1(), H_), sup_abs_bound(g->bundle.d2(), H_));
  bounds_.emplace(g.get(), b);
  return b;
}

Neighborhood Engine::neighborhood(const std::shared_ptr<const RootFunction>& g, const TimePoint& t) {
  auto [b1, b2] = bounds(g);
  return sign_invariant_neighborhood(g, t, b1, b2, H_);
}

TimeInterval Engine::atom_delta(const CompiledAtom& a, const TimePoint& t, Evaluation& ev, bool& first) {
  std::vector<std::shared_ptr<const RootFunction>> parts;
  if (opts_.use_range_factors && !a.factors.empty()) parts = a.factors;
  else parts = {a.phi};
  std::optional<TimeInterval> d;
  for (auto& g : parts) {
    Neighborhood nb = neighborhood(g, t);
    if (nb.sign == Sign::Unresolved) {
      ev.truth = Truth::Unknown;
      return TimeInterval::point(t);
    }
    if (first) {
      ev.epsilon = nb.epsilon;
      ev.theta = nb.theta;
      first = false;
    }
    d = d ? meet(*d, nb.interval) : nb.interval;
  }
  return *d;
}

Evaluation Engine::evaluate(const TimePoint& t) {
  Evaluation ev;
  // Atom truths once, then the CNF combination.
  std::vector<std::vector<Truth>> truths;
  bool unknown = false, violated = false;
  for (auto& clause : f_.clauses) {
    auto& row = truths.emplace_back();
    bool sat = false, cu = false;
    for (auto& a : clause) {
      row.push_back(atom_truth_at(a, t));
      sat = sat || row.back() == Truth::True;
      cu = cu || row.back() == Truth::Unknown;
    }
    if (!sat && !cu) violated = true;
    if (!sat && cu) unknown = true;
  }
  ev.truth = violated ? Truth::False : (unknown ? Truth::Unknown : Truth::True);
  if (ev.truth == Truth::Unknown) return ev;
  bool first = true;
  std::optional<TimeInterval> delta;
  for (std::size_t c = 0; c < f_.clauses.size(); ++c) {
    auto& clause = f_.clauses[c];
    std::optional<TimeInterval> cd;
    bool all_false = true;
    for (std::size_t k = 0; k < clause.size(); ++k) {
      const CompiledAtom& a = clause[k];
      Truth at = truths[c][k];
      if (at == Truth::Unknown) {
        all_false = false;
        continue;
      }
      if (at == Truth::True) all_false = false;
      bool wanted = (ev.truth == Truth::True) == (at == Truth::True);
      if (!wanted) continue;
      TimeInterval d = atom_delta(a, t, ev, first);
      if (ev.truth == Truth::Unknown) return ev;
      if (ev.truth == Truth::True) cd = cd ? join(*cd, d) : d;
      else cd = cd ? meet(*cd, d) : d;
    }
    if (ev.truth == Truth::True) {
      delta = delta ? meet(*delta, *cd) : *cd;
    } else if (all_false && cd) {
      delta = delta ? join(*delta, *cd) : *cd;
    }
  }
  ev.delta = delta ? *delta : TimeInterval::point(t);
  return ev;
}

bool Engine::explore(const TimePoint& t) {
  Evaluation ev = evaluate(t);
  if (ev.truth == Truth::Unknown) {
    stop_ = "formula truth unresolved at sample " + t.to_string();
    return false;
  }
  const TimeInterval& d = ev.delta;
  Rational min_step = (H_.hi - H_.lo) * pow2(-40);
  if (!d.is_point() && d.approx_width() < to_double(min_step)) {
    stop_ = "degenerate neighborhood at sample " + t.to_string();
    return false;
  }
  SampleRecord rec;
  rec.t = t;
  rec.truth = ev.truth;
  rec.delta = d;
  rec.epsilon = ev.epsilon;
  rec.theta = ev.theta;
  if (ev.truth == Truth::True) {
    S_ = S_.unite(IntervalSet(d));
    const TimeInterval* comp = part_containing(B_, t);
    IntervalSet clipped = comp ? IntervalSet(d).intersect(IntervalSet(*comp)) : IntervalSet(d);
    TimeInterval dc = clipped.empty() ? TimeInterval::point(t) : *part_containing(clipped, t);
    rec.essential = essential_samples(dc, t, J_);
    cov_ = cov_.unite(IntervalSet(TimeInterval::closed(rec.essential.front() - J_.hi,
                                                        rec.essential.back() - J_.lo)));
    for (auto& s : rec.essential) res_.witness.push_back(s);
  }
  B_ = B_.subtract(IntervalSet(d));
  res_.trace.push_back(std::move(rec));
  return true;
}

void Engine::add_completion(const TimePoint& t) {
  SampleRecord rec;
  rec.t = t;
  rec.truth = Truth::True;
  rec.delta = TimeInterval::point(t);
  rec.essential = {t};
  rec.completion = true;
  cov_ = cov_.unite(IntervalSet(TimeInterval::closed(t - J_.hi, t - J_.lo)));
  res_.witness.push_back(t);
  res_.trace.push_back(std::move(rec));
}

SampleResult Engine::finish(Verdict v, std::string why) {
  res_.verdict = v;
  res_.reason = std::move(why);
  res_.coverage = cov_;
  if (v != Verdict::Holds) res_.witness.clear();
  return std::move(res_);
}

SampleResult Engine::run() {
  std::size_t evals0 = evaluation_counter();
  auto done = [&](Verdict v, std::string why) {
    std::size_t w = evaluation_counter() - evals0;
    SampleResult r = finish(v, std::move(why));
    r.work = w;
    return r;
  };
  IntervalSet Iset = to_interval_set(I_);
  if (Iset.empty()) return done(Verdict::Holds, "empty outer interval");
  Rational jw = J_.hi - J_.lo;
  if (sgn(jw) == 0 && !(I_.lo == I_.hi)) return done(Verdict::Abstain, "inner interval has zero length");
  B_ = IntervalSet(TimeInterval::closed(TimePoint(H_.lo), TimePoint(H_.hi)));
  try {
    while (true) {
      if (res_.trace.size() >= opts_.max_samples) return done(Verdict::Abstain, "sample budget exhausted");
      IntervalSet R = Iset.subtract(cov_);
      if (R.empty()) return done(Verdict::Holds, "outer interval covered");
      const TimeInterval& first = R.parts().front();
      TimePoint c = first.lo;
      TimeInterval W{c + J_.lo, c + J_.hi, first.lo_closed, true};

      // The far end reaches furthest past the frontier; try it first, then
      // split the widest unexplored piece.
      auto explore_in = [&](const IntervalSet& region) {
        const TimeInterval& far = region.parts().back();
        if (far.hi_closed && far.hi.is_rational()) return explore(far.hi);
        const TimeInterval* best = &region.parts().front();
        for (auto& p : region.parts())
          if (p.approx_width() > best->approx_width()) best = &p;
        TimePoint t = best->is_point() ? best->lo : TimePoint(rational_between(best->lo, best->hi));
        return explore(t);
      };

      IntervalSet WB = IntervalSet(W).intersect(B_);
      if (!WB.empty()) {
        if (!explore_in(WB)) return done(Verdict::Abstain, stop_);
        continue;
      }
      IntervalSet WS = IntervalSet(W).intersect(S_);
      if (WS.empty()) {
        if (first.lo_closed) {
          res_.frontier = c;
          res_.uncovered = IntervalSet(TimeInterval::point(c));
          return done(Verdict::Fails, "no satisfying time in the window of " + c.to_string());
        }
        // c itself is covered; look just right of the window.
        TimePoint q = W.hi;
        if (right_of(B_, q)) {
          IntervalSet ahead = IntervalSet(TimeInterval{q, q + jw, false, true}).intersect(B_);
          if (!explore_in(ahead)) return done(Verdict::Abstain, stop_);
          continue;
        }
        if (right_of(S_, q))
          return done(Verdict::Abstain, "coverage needs infinitely many samples after " + c.to_string());
        IntervalSet bad = IntervalSet(TimeInterval{q, q + jw, false, true}).subtract(B_).subtract(S_);
        TimePoint reach = bad.parts().front().hi - J_.hi;
        TimePoint cp(rational_between(c, min(reach, first.hi)));
        res_.frontier = cp;
        res_.uncovered = IntervalSet(TimeInterval::point(cp));
        return done(Verdict::Fails, "no satisfying time in the window of " + cp.to_string());
      }
      const TimeInterval last = WS.parts().back();
      const TimePoint b = last.hi;
      if (last.hi_closed) {
        add_completion(b);
        continue;
      }
      TimePoint e = b - J_.lo;
      IntervalSet Re = R.intersect(IntervalSet(TimeInterval{c, e, true, false}));
      bool approaching = !Re.empty() && compare(Re.parts().back().hi, e) == 0;
      if (!approaching) {
        TimePoint lo = last.lo;
        if (!Re.empty()) lo = max(lo, Re.parts().back().hi + J_.lo);
        add_completion(TimePoint(rational_between(lo, b)));
        continue;
      }
      if (!R.contains(e))
        return done(Verdict::Abstain, "coverage boundary meets a satisfying-set boundary at " + e.to_string());
      IntervalSet We(TimeInterval::closed(b, b + jw));
      IntervalSet WeB = We.intersect(B_);
      if (!WeB.empty()) {
        if (!explore_in(WeB)) return done(Verdict::Abstain, stop_);
        continue;
      }
      IntervalSet WeS = We.intersect(S_);
      if (WeS.empty()) {
        // Push I' up to the failing point for the report.
        TimePoint near = max(last.lo, b - jw * pow2(-12));
        add_completion(TimePoint(rational_between(near, b)));
        res_.frontier = e;
        res_.uncovered = IntervalSet(TimeInterval::point(e));
        return done(Verdict::Fails, "no satisfying time in the window of " + e.to_string());
      }
      TimePoint a2 = WeS.parts().front().lo;
      if (compare(a2, b + jw) >= 0)
        return done(Verdict::Abstain, "satisfying set touches the window of " + e.to_string() + " at one point");
      add_completion(TimePoint(rational_between(max(last.lo, a2 - jw), b)));
    }
  } catch (const UndecidedComparison& ex) {
    return done(Verdict::Abstain, std::string("undecided comparison: ") + ex.what());
  }
}

}  // namespace

SampleResult decide_sample_driven(const CompiledFormula& f, const Window& I, const Window& J,
                                  const SamplerOptions& opts) {
  Engine eng(f, I, J, opts);
  return eng.run();
}

bool check_witness(const CompiledFormula& f, const Window& I, const Window& J,
                   const std::vector<TimePoint>& witness, std::string* why) {
  IntervalSet covered;
  for (auto& t : witness) {
    if (formula_truth_at(f, t) != Truth::True) {
      if (why) *why = "sample " + t.to_string() + " does not satisfy the formula";
      return false;
    }
    covered = covered.unite(IntervalSet(TimeInterval::closed(t - J.hi, t - J.lo)));
  }
  if (!covered.covers(to_interval_set(I))) {
    if (why) *why = "windows cover " + covered.to_string() + ", not " + I.to_string();
    return false;
  }
  return true;
}

}  // namespace qrr
