#pragma once

#include "qrr/stl/formula.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qrr {

struct HeightBucket {
  long lo, hi;
};

struct BenchConfig {
  std::vector<unsigned> degrees{1, 2};
  std::vector<HeightBucket> buckets{{1, 10}, {11, 100}};
  unsigned instances_per_cell = 10;
  std::uint64_t seed = 42;
  bool run_isolation = true, run_sample = true;
  std::vector<bool> cnf_modes{false, true};
  unsigned threads = 0;  // 0: hardware concurrency

  static BenchConfig full();
  static BenchConfig small();
};

struct BenchInstance {
  std::string id;
  unsigned degree = 0;
  long height = 0;  // drawn target height
  bool cnf = false;
  std::string query;  // "G[..] F[..] formula"
};

// Deterministic in (seed, degree, bucket, cnf, index).
BenchInstance generate_instance(const BenchConfig& cfg, unsigned degree, const HeightBucket& bucket,
                                bool cnf, unsigned index);
std::vector<BenchInstance> generate_instances(const BenchConfig& cfg);

struct BenchRow {
  std::string id;
  unsigned degree = 0;
  long height = 0;
  bool cnf = false;
  std::string method;
  std::string verdict;
  double time_s = 0;
  std::size_t peak_bytes = 0;
  std::size_t work_count = 0;
  bool operator==(const BenchRow&) const = default;
};

// Runs both engines on every instance over fixed observables x.
std::vector<BenchRow> run_benchmark(const BenchConfig& cfg, const std::vector<ExpPolynomial>& x);

void write_csv(const std::string& path, const std::vector<BenchRow>& rows);
std::string to_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_csv(const std::string& text);

}  // namespace qrr
