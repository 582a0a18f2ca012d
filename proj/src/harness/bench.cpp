#include "qrr/harness/bench.hpp"

#include "qrr/harness/alloc_tracker.hpp"
#include "qrr/isolation/isolation.hpp"
#include "qrr/sampler/sampler.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qrr {

BenchConfig BenchConfig::full() {
  BenchConfig c;
  c.degrees = {1, 2, 3, 4};
  c.buckets = {{1, 10}, {11, 100}, {101, 500}, {501, 1000}};
  c.instances_per_cell = 5;
  return c;
}

BenchConfig BenchConfig::small() { return BenchConfig{}; }

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Uniform integer in [lo, hi]. Hand-rolled because the std distributions are
// implementation-defined and instance streams must match across toolchains.
long uniform(std::mt19937_64& rng, long lo, long hi) {
  std::uint64_t span = std::uint64_t(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return lo + long(v % span);
}

std::string eighths(int k) {
  Rational q(k, 8);
  q.canonicalize();
  return to_string(q);
}

// Random monomial of exactly total degree d over 4 variables.
MultiPoly::Monomial monomial(std::mt19937_64& rng, unsigned d) {
  MultiPoly::Monomial m(4, 0);
  for (unsigned k = 0; k < d; ++k) ++m[uniform(rng, 0, 3)];
  return m;
}

std::string random_atom(std::mt19937_64& rng, unsigned degree, long height) {
  MultiPoly p;
  int n = int(uniform(rng, 2, 3));
  int peak = int(uniform(rng, 0, n));  // term carrying the full height; n is the constant
  for (int k = 0; k <= n; ++k) {
    long c = k == peak ? height : uniform(rng, 1, height);
    if (uniform(rng, 0, 1)) c = -c;
    MultiPoly term = MultiPoly::constant(Rational(c));
    if (k < n) {
      auto m = monomial(rng, k == 0 ? degree : unsigned(uniform(rng, 1, degree)));
      for (unsigned v = 0; v < 4; ++v) term = term * pow(MultiPoly::variable(v), m[v]);
    }
    p += term;
  }
  if (p.degree() != degree || p.height() != Rational(height)) return random_atom(rng, degree, height);
  static const char* rel[] = {">", ">=", "<", "<="};
  return p.to_string() + " " + rel[uniform(rng, 0, 3)] + " 0";
}

}  // namespace

BenchInstance generate_instance(const BenchConfig& cfg, unsigned degree, const HeightBucket& bucket,
                                bool cnf, unsigned index) {
  std::uint64_t h = cfg.seed;
  for (std::uint64_t v : {std::uint64_t(degree), std::uint64_t(bucket.lo), std::uint64_t(bucket.hi),
                          std::uint64_t(cnf), std::uint64_t(index)})
    h = mix(h, v);
  std::mt19937_64 rng(h);
  BenchInstance inst;
  inst.degree = degree;
  inst.cnf = cnf;
  inst.height = uniform(rng, bucket.lo, bucket.hi);
  std::ostringstream id;
  id << "d" << degree << "-h" << bucket.lo << "_" << bucket.hi << (cnf ? "-cnf-" : "-single-") << index;
  inst.id = id.str();

  // Multiples of 1/8 in [0, 3].
  auto eighth = [&] { return int(uniform(rng, 0, 24)); };
  int a = eighth(), b = eighth();
  if (a > b) std::swap(a, b);
  int c = eighth(), d = eighth();
  if (c > d) std::swap(c, d);
  if (c == d) {
    if (d < 24) ++d;
    else --c;
  }
  auto w = [](int lo, int hi) { return "[" + eighths(lo) + "," + eighths(hi) + "]"; };

  std::string formula;
  if (cnf) {
    for (int cl = 0; cl < 2; ++cl) {
      if (cl) formula += " & ";
      formula += "(";
      for (int k = 0; k < 3; ++k) {
        if (k) formula += " | ";
        formula += random_atom(rng, degree, inst.height);
      }
      formula += ")";
    }
  } else {
    formula = "(" + random_atom(rng, degree, inst.height) + ")";
  }
  inst.query = "G" + w(a, b) + " F" + w(c, d) + " " + formula;
  return inst;
}

std::vector<BenchInstance> generate_instances(const BenchConfig& cfg) {
  std::vector<BenchInstance> out;
  for (bool cnf : cfg.cnf_modes)
    for (unsigned d : cfg.degrees)
      for (auto& b : cfg.buckets)
        for (unsigned i = 0; i < cfg.instances_per_cell; ++i) out.push_back(generate_instance(cfg, d, b, cnf, i));
  return out;
}

std::vector<BenchRow> run_benchmark(const BenchConfig& cfg, const std::vector<ExpPolynomial>& x) {
  std::vector<BenchInstance> insts = generate_instances(cfg);
  std::vector<std::vector<BenchRow>> rows(insts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next++) < insts.size();) {
      const BenchInstance& inst = insts[i];
      Query q = parse_query(inst.query);
      auto run = [&](const std::string& method, auto&& decide) {
        BenchRow r;
        r.id = inst.id;
        r.degree = inst.degree;
        r.height = inst.height;
        r.cnf = inst.cnf;
        r.method = method;
        alloc_reset_peak();
        auto t0 = std::chrono::steady_clock::now();
        CompiledFormula f = compile_formula(q.formula, x);
        CheckResult res = decide(f);
        r.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.peak_bytes = alloc_peak_bytes();
        r.verdict = to_string(res.verdict);
        r.work_count = res.work;
        rows[i].push_back(r);
      };
      if (cfg.run_isolation)
        run("isolation", [&](const CompiledFormula& f) { return decide_by_isolation(f, q.I, q.J); });
      if (cfg.run_sample)
        run("sample", [&](const CompiledFormula& f) -> CheckResult { return decide_sample_driven(f, q.I, q.J); });
    }
  };
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<BenchRow> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "id,degree,height,cnf,method,verdict,time_s,peak_bytes,work_count\n";
  for (auto& r : rows) {
    os << r.id << ',' << r.degree << ',' << r.height << ',' << (r.cnf ? 1 : 0) << ',' << r.method << ','
       << r.verdict << ',' << std::setprecision(17) << r.time_s << ',' << r.peak_bytes << ',' << r.work_count
       << '\n';
  }
  return os.str();
}

void write_csv(const std::string& path, const std::vector<BenchRow>& rows) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << to_csv(rows);
}

std::vector<BenchRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (line != "id,degree,height,cnf,method,verdict,time_s,peak_bytes,work_count")
    throw std::runtime_error("unexpected CSV header");
  std::vector<BenchRow> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 9) throw std::runtime_error("bad CSV row: " + line);
    BenchRow r;
    r.id = f[0];
    r.degree = static_cast<unsigned>(std::stoul(f[1]));
    r.height = std::stol(f[2]);
    r.cnf = f[3] == "1";
    r.method = f[4];
    r.verdict = f[5];
    r.time_s = std::stod(f[6]);
    r.peak_bytes = std::stoull(f[7]);
    r.work_count = std::stoull(f[8]);
    out.push_back(r);
  }
  return out;
}

}  // namespace qrr
