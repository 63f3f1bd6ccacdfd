#include <algorithm>

#include "construct.hpp"

namespace spancon {
namespace {

Container complete_graph(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  std::vector<Vertex> middle;
  for (Label x = 1; x <= g.n(); ++x) {
    if (x != u.at(1) && x != v.at(1)) middle.push_back(Vertex{x});
  }
  std::vector<Path> paths;
  if (l == 1) {
    paths.push_back(detail::join(u, Path(middle), v));
  } else {
    paths.push_back({u, v});
    for (int j = 0; j + 2 < l; ++j) paths.push_back({u, middle[static_cast<std::size_t>(j)], v});
    paths.push_back(detail::join(u, Path(middle.begin() + (l - 2), middle.end()), v));
  }
  return detail::finish(g, u, v, std::move(paths));
}

// A Hamiltonian cycle through u, cut at u and v.
Container two_paths(const Arrangement& g, const Vertex& u, const Vertex& v) {
  Vertex w;
  for (const auto& x : g.neighbors(u)) {
    if (x != v) {
      w = x;
      break;
    }
  }
  Path cycle = hamiltonian_path(g, u, w);
  auto at = std::find(cycle.begin(), cycle.end(), v);
  Path first(cycle.begin(), at + 1);
  Path second{u};
  second.insert(second.end(), cycle.rbegin(), std::make_reverse_iterator(at));
  return detail::finish(g, u, v, {std::move(first), std::move(second)});
}

}  // namespace

Container container(const ContainerRequest& req) {
  const Arrangement& g = req.g;
  g.require_vertex(req.u);
  g.require_vertex(req.v);
  if (req.u == req.v) throw InputError("endpoints must differ");
  if (req.l < 1 || req.l > g.degree()) {
    throw InputError("l must lie in 1.." + std::to_string(g.degree()));
  }
  if (g.k() == 1) return complete_graph(g, req.u, req.v, req.l);
  if (g.n() - g.k() < 2) {
    throw UnsupportedFamily("A(" + std::to_string(g.n()) + "," + std::to_string(g.k()) +
                            ") is bipartite with equal parts; it has no spanning containers "
                            "between vertices of the same part");
  }
  if (req.l == 1) {
    CaseScope scope("hamiltonian");
    return detail::finish(g, req.u, req.v, {hamiltonian_path(g, req.u, req.v)});
  }
  if (req.l == 2) {
    CaseScope scope("cycle");
    return two_paths(g, req.u, req.v);
  }
  if (g.n() == 4) return base_table_a42(req.u, req.v, req.l);
  if (req.l <= (g.n() - g.k()) * (g.k() - 1)) return container_general(req);
  return container_high(req);
}

}  // namespace spancon
