#include "qrr/errors.hpp"
#include "qrr/harness/alloc_tracker.hpp"
#include "qrr/harness/bench.hpp"
#include "qrr/harness/model_io.hpp"
#include "qrr/harness/report.hpp"
#include "qrr/isolation/isolation.hpp"
#include "qrr/sampler/sampler.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>

using namespace qrr;

namespace {

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 0;
    case Verdict::Fails: return 1;
    case Verdict::Abstain: return 2;
  }
  return 3;
}

std::vector<ExpPolynomial> load_observables(const std::string& path, bool inexact, long bits) {
  QctmcModel m = load_model(path);
  require_valid(m);
  ClosedFormOptions opts;
  opts.allow_fallback = inexact;
  opts.fallback_bits = bits;
  SymbolicState st = closed_form_solution(m, opts);
  return observables(m, st);
}

int cmd_check(const std::string& model, const std::string& query, const std::string& method, long bits,
              bool json, bool inexact) {
  auto x = load_observables(model, inexact, bits);
  Query q = parse_query(query);
  CompiledFormula f = compile_formula(q.formula, x);
  nlohmann::json out;
  std::optional<Verdict> iso, smp;
  if (method == "isolation" || method == "both") {
    CheckResult r = decide_by_isolation(f, q.I, q.J);
    iso = r.verdict;
    if (json) out["isolation"] = result_to_json(r);
    else std::cout << format_result("isolation", r);
  }
  if (method == "sample" || method == "both") {
    SampleResult r = decide_sample_driven(f, q.I, q.J);
    smp = r.verdict;
    if (json) out["sample"] = result_to_json(r);
    else std::cout << format_result("sample", r) << "  samples: " << r.trace.size() << "\n";
  }
  if (json) std::cout << out.dump(2) << "\n";
  if (iso && smp) {
    if (*iso != Verdict::Abstain && *smp != Verdict::Abstain && *iso != *smp) {
      std::cerr << "engines disagree\n";
      return 3;
    }
    return exit_code(*iso != Verdict::Abstain ? *iso : *smp);
  }
  return exit_code(iso ? *iso : *smp);
}

int cmd_isolate(const std::string& model, const std::string& atom, const std::string& interval, bool json,
                bool inexact, long bits) {
  auto x = load_observables(model, inexact, bits);
  CnfFormula cf = parse_formula(atom);
  if (cf.clauses.size() != 1 || cf.clauses[0].size() != 1) throw ValidationError({"expected a single atom"});
  CompiledAtom a = compile_atom(cf.clauses[0][0], x);
  Window w = parse_window(interval);
  IsolationReport rep = isolate_all(a.phi, TimeBox{w.lo, w.hi});
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : rep.roots) {
    Rational mid = (r.lo + r.hi) / 2;
    if (json) {
      arr.push_back({{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"approx", to_double(mid)}});
    } else {
      std::cout << "[" << to_string(r.lo) << ", " << to_string(r.hi) << "]  ~" << std::setprecision(12)
                << to_double(mid) << "\n";
    }
  }
  for (auto& u : rep.unresolved) {
    if (json) arr.push_back({{"unresolved", {to_string(u.lo), to_string(u.hi)}}});
    else std::cout << "unresolved [" << to_string(u.lo) << ", " << to_string(u.hi) << "]\n";
  }
  if (json) std::cout << arr.dump(2) << "\n";
  return rep.unresolved.empty() ? 0 : 2;
}

int cmd_bench(const std::string& model, std::uint64_t seed, const std::string& grid, const std::string& out,
              unsigned threads, const std::string& methods) {
  install_gmp_alloc_hooks();
  BenchConfig cfg = grid == "paper" ? BenchConfig::full() : BenchConfig::small();
  cfg.seed = seed;
  cfg.threads = threads;
  cfg.run_isolation = methods != "sample";
  cfg.run_sample = methods != "isolation";
  auto x = load_observables(model, false, 192);
  std::vector<BenchRow> rows = run_benchmark(cfg, x);
  write_csv(out, rows);
  // Per-cell means.
  std::map<std::tuple<bool, unsigned, std::string, std::string>, std::pair<double, int>> cell;
  for (auto& r : rows) {
    std::string bucket = r.id.substr(r.id.find('-') + 1);
    bucket = bucket.substr(0, bucket.find('-'));
    auto& c = cell[{r.cnf, r.degree, bucket, r.method}];
    c.first += r.time_s;
    c.second += 1;
  }
  std::cout << "mode    degree height        method     mean_time_s\n";
  for (auto& [k, v] : cell) {
    std::cout << std::left << std::setw(8) << (std::get<0>(k) ? "cnf" : "single") << std::setw(7)
              << std::get<1>(k) << std::setw(14) << std::get<2>(k) << std::setw(11) << std::get<3>(k)
              << v.first / v.second << "\n";
  }
  std::cout << rows.size() << " rows written to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repeated reachability checking for quantum CTMCs"};
  app.require_subcommand(1);

  std::string model, query, method = "both", atom, interval = "[0,3]", grid = "small", out = "bench.csv";
  std::string methods = "both";
  long bits = 192;
  bool json = false, inexact = false;
  std::uint64_t seed = 42;
  unsigned threads = 0;

  auto* check = app.add_subcommand("check", "Decide G_I F_J formula");
  check->add_option("--model", model, "Model JSON")->required();
  check->add_option("--query", query, "e.g. \"G[0,3/2] F[0,1] (x2 - x1^2 > 0)\"")->required();
  check->add_option("--method", method)->check(CLI::IsMember({"sample", "isolation", "both"}));
  check->add_option("--precision", bits, "Bits for the inexact closed form");
  check->add_flag("--json", json);
  check->add_flag("--inexact-model", inexact, "Allow certified numeric eigenvalues");

  auto* iso = app.add_subcommand("isolate", "Isolate the roots of an atom's observing expression");
  iso->add_option("--model", model)->required();
  iso->add_option("--atom", atom)->required();
  iso->add_option("--interval", interval);
  iso->add_flag("--json", json);
  iso->add_flag("--inexact-model", inexact);
  iso->add_option("--precision", bits);

  auto* bench = app.add_subcommand("bench", "Random-instance benchmark");
  bench->add_option("--model", model)->required();
  bench->add_option("--seed", seed);
  bench->add_option("--grid", grid)->check(CLI::IsMember({"paper", "small"}));
  bench->add_option("--out", out);
  bench->add_option("--threads", threads);
  bench->add_option("--methods", methods)->check(CLI::IsMember({"sample", "isolation", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 4;
  }
  try {
    if (*check) return cmd_check(model, query, method, bits, json, inexact);
    if (*iso) return cmd_isolate(model, atom, interval, json, inexact, bits);
    if (*bench) return cmd_bench(model, seed, grid, out, threads, methods);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  }
  return 4;
}
