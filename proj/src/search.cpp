#include "spancon/search.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "spancon/error.hpp"

namespace spancon {
namespace {

struct BudgetExhausted {};

class HamiltonianSearch {
 public:
  HamiltonianSearch(const SubgraphView& view, std::uint64_t max_nodes)
      : vertices_(view.vertices()), max_nodes_(max_nodes) {
    const std::size_t count = vertices_.size();
    adjacency_.resize(count);
    matrix_.assign(count * count, 0);
    for (std::size_t i = 0; i < count; ++i) {
      for (const auto& w : view.neighbors(vertices_[i])) {
        int j = index_of(w);
        adjacency_[i].push_back(j);
        matrix_[i * count + static_cast<std::size_t>(j)] = 1;
      }
    }
    interval_ = count <= 30 ? 1 : 8;
  }

  int index_of(const Vertex& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
  }

  SearchOutcome run(int source, int target, Path& out) {
    const std::size_t count = vertices_.size();
    visited_.assign(count, 0);
    free_.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) free_[i] = static_cast<int>(adjacency_[i].size());
    remaining_ = static_cast<int>(count);
    sides_[0].clear();
    sides_[1].clear();
    visit(0, source);
    visit(1, target);
    bool found = false;
    try {
      found = quick_reject() ? false : extend();
    } catch (const BudgetExhausted&) {
      return SearchOutcome::kBudgetExceeded;
    }
    if (!found) return SearchOutcome::kNotFound;
    out.clear();
    for (int i : sides_[0]) out.push_back(vertices_[static_cast<std::size_t>(i)]);
    for (auto it = sides_[1].rbegin(); it != sides_[1].rend(); ++it) {
      out.push_back(vertices_[static_cast<std::size_t>(*it)]);
    }
    return SearchOutcome::kFound;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool adj(int a, int b) const {
    return matrix_[static_cast<std::size_t>(a) * vertices_.size() + static_cast<std::size_t>(b)];
  }
  int end(int side) const { return sides_[side].back(); }

  void visit(int side, int w) {
    visited_[static_cast<std::size_t>(w)] = 1;
    --remaining_;
    for (int x : adjacency_[static_cast<std::size_t>(w)]) --free_[static_cast<std::size_t>(x)];
    sides_[side].push_back(w);
  }

  void unvisit(int side) {
    int w = sides_[side].back();
    sides_[side].pop_back();
    for (int x : adjacency_[static_cast<std::size_t>(w)]) ++free_[static_cast<std::size_t>(x)];
    ++remaining_;
    visited_[static_cast<std::size_t>(w)] = 0;
  }

  // Options left for an unvisited vertex: unvisited neighbors plus ends.
  bool viable(int x) const {
    int f = free_[static_cast<std::size_t>(x)];
    if (remaining_ > 1 && f == 0) return false;
    return f + adj(x, end(0)) + adj(x, end(1)) >= 2;
  }

  bool quick_reject() const {
    if (remaining_ == 0) return false;
    for (std::size_t x = 0; x < vertices_.size(); ++x) {
      if (!visited_[x] && !viable(static_cast<int>(x))) return true;
    }
    return free_[static_cast<std::size_t>(end(0))] == 0 || free_[static_cast<std::size_t>(end(1))] == 0;
  }

  bool unvisited_connected() {
    int start = -1;
    for (std::size_t x = 0; x < vertices_.size(); ++x) {
      if (!visited_[x]) {
        start = static_cast<int>(x);
        break;
      }
    }
    stack_.assign(1, start);
    mark_.assign(vertices_.size(), 0);
    mark_[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!stack_.empty()) {
      int x = stack_.back();
      stack_.pop_back();
      for (int y : adjacency_[static_cast<std::size_t>(x)]) {
        if (visited_[static_cast<std::size_t>(y)] || mark_[static_cast<std::size_t>(y)]) continue;
        mark_[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack_.push_back(y);
      }
    }
    return reached == remaining_;
  }

  bool extend() {
    if (remaining_ == 0) return adj(end(0), end(1));
    if (++nodes_ > max_nodes_) throw BudgetExhausted{};
    if (++since_check_ >= interval_) {
      since_check_ = 0;
      if (!unvisited_connected()) return false;
    }
    int side = free_[static_cast<std::size_t>(end(0))] <= free_[static_cast<std::size_t>(end(1))] ? 0 : 1;
    int e = end(side);
    int other = end(1 - side);

    std::vector<int> candidates;
    int forced = -1;
    int forced_count = 0;
    for (int w : adjacency_[static_cast<std::size_t>(e)]) {
      if (visited_[static_cast<std::size_t>(w)]) continue;
      candidates.push_back(w);
      int eff = free_[static_cast<std::size_t>(w)] + 1 + adj(w, other);
      if (eff == 2) {
        forced = w;
        ++forced_count;
      }
    }
    if (forced_count > 1) return false;
    if (forced_count == 1) {
      candidates.assign(1, forced);
    } else {
      // Fewest onward options first; ties keep lexicographic order.
      std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        return free_[static_cast<std::size_t>(a)] < free_[static_cast<std::size_t>(b)];
      });
    }

    for (int w : candidates) {
      if (remaining_ > 1 && free_[static_cast<std::size_t>(w)] == 0) continue;
      visit(side, w);
      bool ok = remaining_ == 0 || (free_[static_cast<std::size_t>(w)] > 0 &&
                                    free_[static_cast<std::size_t>(other)] > 0);
      if (ok) {
        for (int hub : {e, w}) {
          for (int x : adjacency_[static_cast<std::size_t>(hub)]) {
            if (!visited_[static_cast<std::size_t>(x)] && !viable(x)) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
      if (ok && extend()) return true;
      unvisit(side);
    }
    return false;
  }

  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<char> matrix_;
  std::vector<char> visited_;
  std::vector<int> free_;
  std::array<std::vector<int>, 2> sides_;
  std::vector<int> stack_;
  std::vector<char> mark_;
  int remaining_ = 0;
  int interval_ = 1;
  int since_check_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

}  // namespace

SearchBudget SearchBudget::from_environment() {
  SearchBudget budget;
  if (const char* env = std::getenv("SPANCON_BUDGET")) {
    char* endp = nullptr;
    unsigned long long value = std::strtoull(env, &endp, 10);
    if (endp != env && *endp == '\0' && value > 0) budget.max_nodes = value;
  }
  return budget;
}

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound: return "found";
    case SearchOutcome::kNotFound: return "not-found";
    case SearchOutcome::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

SearchResult ham_path_search(const SubgraphView& view, const Vertex& u, const Vertex& v,
                             SearchBudget budget) {
  if (!view.contains(u) || !view.contains(v)) throw InputError("endpoint outside the view");
  if (u == v) throw InputError("endpoints must differ");
  HamiltonianSearch search(view, budget.max_nodes);
  SearchResult result;
  result.outcome = search.run(search.index_of(u), search.index_of(v), result.path);
  result.nodes_expanded = search.nodes();
  return result;
}

}  // namespace spancon
