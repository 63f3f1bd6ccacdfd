#include "spancon/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "spancon/containers.hpp"
#include "spancon/error.hpp"
#include "spancon/io.hpp"
#include "spancon/verify.hpp"

namespace spancon {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Nearest-rank percentile of sorted data.
double percentile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

int max_l(const SweepConfig& cfg) { return cfg.l_max == 0 ? cfg.k * (cfg.n - cfg.k) : cfg.l_max; }

void build_cell(const Arrangement& g, SweepCell& cell, bool keep_json) {
  auto t0 = Clock::now();
  try {
    Container c = container({g, cell.u, cell.v, cell.l});
    ValidationReport r = validate_container(g, c);
    cell.ok = r.ok();
    if (!cell.ok) cell.error = std::string(to_string(r.issues.front().code)) + ": " + r.issues.front().message;
    if (cell.ok && keep_json) cell.json = to_json(c);
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  cell.seconds = seconds_since(t0);
}

}  // namespace

void check_sweep_config(const SweepConfig& cfg) {
  Arrangement g(cfg.n, cfg.k);
  if (cfg.k > 1 && cfg.n - cfg.k < 2) throw UnsupportedFamily("A(n,n-1) has no spanning containers");
  if (!cfg.all_pairs && cfg.sample_count < 1) throw InputError("sample count must be at least 1");
  if (cfg.l_min < 1 || cfg.l_min > max_l(cfg) || max_l(cfg) > g.degree()) {
    throw InputError("l range must lie within 1.." + std::to_string(g.degree()));
  }
  if (cfg.workers < 0) throw InputError("worker count must not be negative");
}

std::vector<std::pair<Vertex, Vertex>> sweep_pairs(const SweepConfig& cfg) {
  Arrangement g(cfg.n, cfg.k);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const std::uint64_t count = g.vertex_count();
  if (cfg.all_pairs) {
    const auto vs = g.vertices();
    for (const auto& u : vs) {
      for (const auto& v : vs) {
        if (u != v) pairs.emplace_back(u, v);
      }
    }
    return pairs;
  }
  const std::uint64_t total = count * (count - 1);
  const std::uint64_t want = std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.sample_count), total);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  while (pairs.size() < want) {
    const std::uint64_t a = pick(rng);
    const std::uint64_t b = pick(rng);
    if (a == b || !seen.emplace(a, b).second) continue;
    pairs.emplace_back(g.unrank(a), g.unrank(b));
  }
  return pairs;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
  check_sweep_config(cfg);
  const Arrangement g(cfg.n, cfg.k);
  SweepSummary s;
  for (const auto& [u, v] : sweep_pairs(cfg)) {
    for (int l = cfg.l_min; l <= max_l(cfg); ++l) s.cells.push_back({u, v, l, false, {}, 0, {}});
  }

  auto t0 = Clock::now();
  const unsigned workers =
      cfg.workers > 0 ? static_cast<unsigned>(cfg.workers) : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < s.cells.size(); i = next++) build_cell(g, s.cells[i], cfg.keep_json);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  s.wall = seconds_since(t0);

  std::vector<double> times;
  for (const auto& c : s.cells) {
    ++s.attempted;
    ++(c.ok ? s.ok : s.failed);
    times.push_back(c.seconds);
  }
  std::sort(times.begin(), times.end());
  s.p50 = percentile(times, 0.50);
  s.p90 = percentile(times, 0.90);
  s.p99 = percentile(times, 0.99);
  s.max = times.empty() ? 0 : times.back();
  return s;
}

}  // namespace spancon
