#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spancon/arrangement.hpp"

namespace spancon {

struct SweepConfig {
  int n = 0;
  int k = 0;
  bool all_pairs = true;
  int sample_count = 0;  // ordered pairs drawn when !all_pairs
  std::uint64_t seed = 0;
  int l_min = 1;
  int l_max = 0;    // 0 means k(n-k)
  int workers = 0;  // 0 means hardware concurrency
  bool keep_json = false;
};

struct SweepCell {
  Vertex u;
  Vertex v;
  int l = 0;
  bool ok = false;
  std::string error;  // case path and message on failure
  double seconds = 0;
  std::string json;   // filled when keep_json is set and the build succeeded
};

struct SweepSummary {
  long attempted = 0;
  long ok = 0;
  long failed = 0;
  double p50 = 0;
  double p90 = 0;
  double p99 = 0;
  double max = 0;
  double wall = 0;
  std::vector<SweepCell> cells;  // in task order, independent of worker count
};

// Throws InputError for an unusable configuration, including the excluded
// family n - k < 2 with k > 1.
void check_sweep_config(const SweepConfig& cfg);

// The ordered (u, v) pairs the sweep visits. Sampling is seeded and draws
// distinct pairs.
std::vector<std::pair<Vertex, Vertex>> sweep_pairs(const SweepConfig& cfg);

SweepSummary run_sweep(const SweepConfig& cfg);

}  // namespace spancon
