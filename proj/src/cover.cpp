#include <algorithm>
#include <set>

#include "construct.hpp"

namespace spancon {

std::vector<Path> disjoint_path_cover(const Arrangement& g, int t, const std::vector<Vertex>& A,
                                      const std::vector<Vertex>& B) {
  const std::size_t m = A.size();
  if (m == 0 || m != B.size() || static_cast<int>(m) > g.n()) throw InputError("need 1 <= |A| = |B| <= n");
  if (t < 1 || t > g.k()) throw InputError("position out of range");
  // A pair with A[j] == B[j] is a one-vertex path; the final sweep skips it.
  std::vector<Vertex> single;
  std::set<Vertex> seen;
  std::set<Label> labels_a;
  std::set<Label> labels_b;
  for (std::size_t j = 0; j < m; ++j) {
    g.require_vertex(A[j]);
    g.require_vertex(B[j]);
    if (A[j] == B[j]) single.push_back(A[j]);
    if (!seen.insert(A[j]).second || (A[j] != B[j] && !seen.insert(B[j]).second)) {
      throw InputError("endpoints must be distinct");
    }
    if (!labels_a.insert(A[j].at(t)).second || !labels_b.insert(B[j].at(t)).second) {
      throw InputError("t-th labels must be distinct within each side");
    }
  }

  // Re-pair so that endpoints sharing a class are joined inside it.
  std::vector<std::size_t> partner(m, m);
  std::vector<char> b_taken(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (A[i].at(t) == B[j].at(t)) {
        partner[i] = j;
        b_taken[j] = 1;
      }
    }
  }
  std::vector<Path> out(m);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i] == B[i]) {
      out[i] = {A[i]};
    } else if (partner[i] < m) {
      order.push_back(i);
    }
  }
  std::size_t next_b = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (partner[i] < m) continue;
    while (b_taken[next_b]) ++next_b;
    partner[i] = next_b;
    b_taken[next_b] = 1;
    order.push_back(i);
  }

  if (order.empty()) throw ConstructionError("no pair left to sweep the remaining vertices");
  std::vector<Label> used;
  for (std::size_t r = 0; r + 1 < order.size(); ++r) {
    std::size_t i = order[r];
    const Vertex& b = B[partner[i]];
    std::vector<Label> classes{A[i].at(t)};
    if (b.at(t) != A[i].at(t)) classes.push_back(b.at(t));
    out[i] = detail::union_path(g, t, classes, A[i], b);
    used.insert(used.end(), classes.begin(), classes.end());
  }
  std::size_t last = order.back();
  const std::vector<Label> rest = detail::labels_except(g.n(), used);
  Path sweep = detail::union_path(g, t, rest, A[last], B[partner[last]]);
  for (const Vertex& x : single) {
    auto at = std::find(sweep.begin(), sweep.end(), x);
    if (at == sweep.end()) continue;
    if (g.adjacent(*(at - 1), *(at + 1))) {
      sweep.erase(at);
    } else {
      SubgraphView view = SubgraphView(g).pinned(t, rest).without_vertices(single);
      if (view.size() > kSearchLimit) throw ConstructionError("cannot route around " + to_text(x, g.n()));
      sweep = view_hamiltonian_path(view, A[last], B[partner[last]]);
      break;
    }
  }
  out[last] = std::move(sweep);
  return out;
}

}  // namespace spancon
