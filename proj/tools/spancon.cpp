// Command-line front end. Exit codes: 0 ok, 1 negative verification or
// oracle answer, 2 construction failure, 3 usage or input error.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spancon/containers.hpp"
#include "spancon/error.hpp"
#include "spancon/io.hpp"
#include "spancon/sweep.hpp"
#include "spancon/verify.hpp"

using namespace spancon;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kConstruction = 2;
constexpr int kUsage = 3;

struct Args {
  int n = 0;
  int k = 0;
  std::string u;
  std::string v;
  int l = 0;
  std::string out = "-";
  std::string file;
  std::string pairs = "all";
  std::string l_range = "full";
  int workers = 0;
};

void add_graph(CLI::App* cmd, Args& a) {
  cmd->add_option("-n", a.n, "number of labels")->required();
  cmd->add_option("-k", a.k, "vertex length")->required();
}

void add_request(CLI::App* cmd, Args& a) {
  add_graph(cmd, a);
  cmd->add_option("-u", a.u, "first endpoint")->required();
  cmd->add_option("-v", a.v, "second endpoint")->required();
  cmd->add_option("-l", a.l, "number of paths")->required();
}

void write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f || !(f << text)) throw InputError("cannot write " + path);
}

ContainerRequest request(const Args& a) {
  Arrangement g(a.n, a.k);
  Vertex u = parse_vertex(a.u, a.n);
  Vertex v = parse_vertex(a.v, a.n);
  g.require_vertex(u);
  g.require_vertex(v);
  return {g, u, v, a.l};
}

int cmd_gen(const Args& a) {
  ContainerRequest req = request(a);
  try {
    write_out(a.out, to_json(container(req)));
  } catch (const UnsupportedFamily& e) {
    std::cerr << "spancon: " << e.what() << '\n';
    return kConstruction;
  } catch (const ConstructionError& e) {
    std::cerr << "spancon: construction failed at " << e.case_path() << ": " << e.detail() << '\n';
    return kConstruction;
  }
  return kOk;
}

int cmd_verify(const Args& a) {
  std::ifstream f(a.file);
  if (!f) throw InputError("cannot read " + a.file);
  std::stringstream text;
  text << f.rdbuf();
  Container c = container_from_json(text.str());
  ValidationReport r = validate_container(Arrangement(c.n, c.k), c);
  std::cout << report_to_json(r);
  return r.ok() ? kOk : kNegative;
}

// "all", or "sample:COUNT:SEED" where SEED may carry a "seed" prefix.
void parse_pairs(const std::string& text, SweepConfig& cfg) {
  if (text == "all") return;
  std::string count;
  std::string seed;
  std::istringstream in(text);
  std::string head;
  if (!std::getline(in, head, ':') || head != "sample" || !std::getline(in, count, ':') ||
      !std::getline(in, seed) || seed.empty()) {
    throw InputError("--pairs must be 'all' or 'sample:COUNT:SEED'");
  }
  if (seed.starts_with("seed")) seed = seed.substr(4);
  try {
    std::size_t used = 0;
    cfg.sample_count = std::stoi(count, &used);
    if (used != count.size()) throw std::invalid_argument(count);
    cfg.seed = std::stoull(seed, &used);
    if (used != seed.size()) throw std::invalid_argument(seed);
  } catch (const std::logic_error&) {
    throw InputError("bad sample count or seed in '" + text + "'");
  }
  cfg.all_pairs = false;
}

// "full", "L" or "A..B".
void parse_l_range(const std::string& text, SweepConfig& cfg) {
  if (text == "full") return;
  try {
    std::size_t dots = text.find("..");
    std::size_t used = 0;
    std::string lo = dots == std::string::npos ? text : text.substr(0, dots);
    std::string hi = dots == std::string::npos ? text : text.substr(dots + 2);
    cfg.l_min = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    cfg.l_max = std::stoi(hi, &used);
    if (used != hi.size() || cfg.l_max < cfg.l_min) throw std::invalid_argument(hi);
  } catch (const std::logic_error&) {
    throw InputError("--l must be 'full', 'L' or 'A..B'");
  }
}

int cmd_sweep(const Args& a) {
  SweepConfig cfg;
  cfg.n = a.n;
  cfg.k = a.k;
  cfg.workers = a.workers;
  parse_pairs(a.pairs, cfg);
  parse_l_range(a.l_range, cfg);
  SweepSummary s = run_sweep(cfg);
  int shown = 0;
  for (const auto& c : s.cells) {
    if (c.ok || shown++ >= 20) continue;
    std::cout << "FAIL u=" << to_text(c.u, a.n) << " v=" << to_text(c.v, a.n) << " l=" << c.l << ": " << c.error
              << '\n';
  }
  std::printf("attempted %ld ok %ld failed %ld\n", s.attempted, s.ok, s.failed);
  std::printf("seconds p50 %.6f p90 %.6f p99 %.6f max %.6f wall %.3f\n", s.p50, s.p90, s.p99, s.max, s.wall);
  return s.failed == 0 ? kOk : kConstruction;
}

int cmd_oracle(const Args& a) {
  ContainerRequest req = request(a);
  if (req.l < 1) throw InputError("l must be at least 1");
  const bool exists = oracle_container_exists(req.g, req.u, req.v, req.l);
  std::cout << (exists ? "exists" : "not-exists") << '\n';
  return exists ? kOk : kNegative;
}

int cmd_stats(const Args& a) {
  Arrangement g(a.n, a.k);
  std::cout << "A(" << a.n << "," << a.k << ")\n"
            << "vertices " << g.vertex_count() << '\n'
            << "degree " << g.degree() << '\n'
            << "edges " << g.edge_count() << '\n';
  if (a.k > 1) {
    // The same count holds for every position and label pair.
    std::cout << "cross-edges " << g.cross_edge_count() << " per position and label pair\n";
  }
  return kOk;
}

int cmd_export_dot(const Args& a) {
  write_out(a.out, to_dot(Arrangement(a.n, a.k)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning containers in arrangement graphs"};
  app.require_subcommand(1);
  Args a;

  auto* gen = app.add_subcommand("gen", "build an l-path spanning container and print its JSON");
  add_request(gen, a);
  gen->add_option("-o,--out", a.out, "output file, - for stdout");

  auto* verify = app.add_subcommand("verify", "check a container JSON file");
  verify->add_option("file", a.file)->required();

  auto* sweep = app.add_subcommand("sweep", "build and check containers over many pairs");
  add_graph(sweep, a);
  sweep->add_option("--pairs", a.pairs, "all | sample:COUNT:SEED");
  sweep->add_option("--l", a.l_range, "full | L | A..B");
  sweep->add_option("-j,--workers", a.workers, "worker threads, 0 for all cores");

  auto* oracle = app.add_subcommand("oracle", "exhaustive existence check (at most 24 vertices)");
  add_request(oracle, a);

  auto* stats = app.add_subcommand("stats", "vertex, degree, edge and cross-edge counts");
  add_graph(stats, a);

  auto* dot = app.add_subcommand("export-dot", "write the graph in DOT format (n <= 5)");
  add_graph(dot, a);
  dot->add_option("-o,--out", a.out, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(a);
    if (*verify) return cmd_verify(a);
    if (*sweep) return cmd_sweep(a);
    if (*oracle) return cmd_oracle(a);
    if (*stats) return cmd_stats(a);
    return cmd_export_dot(a);
  } catch (const InputError& e) {
    std::cerr << "spancon: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "spancon: " << e.what() << '\n';
    return kConstruction;
  }
}
