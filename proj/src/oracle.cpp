// Exhaustive searches used to cross-check the constructions. They share no
// code with the search engine or the builders.
#include <algorithm>
#include <vector>

#include "spancon/error.hpp"
#include "spancon/verify.hpp"

namespace spancon {
namespace {

struct Dense {
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<char>> matrix;

  explicit Dense(const SubgraphView& view) : vertices(view.vertices()) {
    const std::size_t count = vertices.size();
    adj.resize(count);
    matrix.assign(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (i != j && view.has_edge(vertices[i], vertices[j])) {
          adj[i].push_back(static_cast<int>(j));
          matrix[i][j] = 1;
        }
      }
    }
  }

  int index(const Vertex& x) const {
    auto it = std::find(vertices.begin(), vertices.end(), x);
    if (it == vertices.end()) throw InputError("vertex outside the graph");
    return static_cast<int>(it - vertices.begin());
  }
};

class PathOracle {
 public:
  PathOracle(const Dense& d, int target) : d_(d), target_(target), used_(d.vertices.size(), 0) {}

  bool run(int source) {
    used_[static_cast<std::size_t>(source)] = 1;
    left_ = static_cast<int>(d_.vertices.size()) - 1;
    return dfs(source);
  }

 private:
  bool dfs(int at) {
    if (at == target_) return left_ == 0;
    for (int w : d_.adj[static_cast<std::size_t>(at)]) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      if (w == target_ && left_ != 1) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      --left_;
      if (!stranded(w) && dfs(w)) return true;
      ++left_;
      used_[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  // Some unused vertex other than the target can no longer be passed through.
  bool stranded(int at) const {
    for (std::size_t x = 0; x < used_.size(); ++x) {
      if (used_[x] || static_cast<int>(x) == target_) continue;
      int options = 0;
      for (int w : d_.adj[x]) {
        if (!used_[static_cast<std::size_t>(w)] || w == at) ++options;
      }
      if (options < 2) return true;
    }
    return false;
  }

  const Dense& d_;
  int target_;
  std::vector<char> used_;
  int left_ = 0;
};

class ContainerOracle {
 public:
  ContainerOracle(const Dense& d, int u, int v, int l)
      : d_(d), u_(u), v_(v), l_(l), used_(d.vertices.size(), 0) {}

  bool run() {
    used_[static_cast<std::size_t>(u_)] = 1;
    used_[static_cast<std::size_t>(v_)] = 1;
    left_ = static_cast<int>(d_.vertices.size()) - 2;
    return start_path(0, -1);
  }

 private:
  // Paths are an unordered set: the first vertex after u strictly increases
  // from one path to the next.
  bool start_path(int done, int last_first) {
    if (done == l_) return left_ == 0;
    for (int w : d_.adj[static_cast<std::size_t>(u_)]) {
      if (w <= last_first) continue;
      if (w == v_) {
        if (start_path(done + 1, w)) return true;
        continue;
      }
      if (used_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      --left_;
      if (grow(w, done, w)) return true;
      ++left_;
      used_[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  bool grow(int at, int done, int first) {
    if (d_.matrix[static_cast<std::size_t>(at)][static_cast<std::size_t>(v_)] && start_path(done + 1, first)) {
      return true;
    }
    for (int w : d_.adj[static_cast<std::size_t>(at)]) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      --left_;
      if (grow(w, done, first)) return true;
      ++left_;
      used_[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  const Dense& d_;
  int u_;
  int v_;
  int l_;
  std::vector<char> used_;
  int left_ = 0;
};

}  // namespace

bool oracle_ham_path(const SubgraphView& view, const Vertex& u, const Vertex& v) {
  if (view.size() > 60) throw InputError("oracle_ham_path is limited to 60 vertices");
  if (u == v) throw InputError("endpoints must differ");
  if (!view.contains(u) || !view.contains(v)) throw InputError("endpoint outside the view");
  Dense d(view);
  return PathOracle(d, d.index(v)).run(d.index(u));
}

bool oracle_container_exists(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  if (g.vertex_count() > 24) throw InputError("oracle_container_exists is limited to 24 vertices");
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) throw InputError("endpoints must differ");
  if (l < 1) throw InputError("l must be positive");
  if (l > g.degree()) return false;
  Dense d{SubgraphView(g)};
  return ContainerOracle(d, d.index(u), d.index(v), l).run();
}

}  // namespace spancon
