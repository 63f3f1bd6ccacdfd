#include "spancon/hampath.hpp"

#include <algorithm>
#include <optional>

#include "spancon/error.hpp"

namespace spancon {
namespace {

Path complete_graph_path(const std::vector<Label>& labels, const Vertex& u, const Vertex& v) {
  Path out{u};
  for (Label x : labels) {
    if (x != u.at(1) && x != v.at(1)) out.push_back(Vertex{x});
  }
  out.push_back(v);
  return out;
}

std::string describe(const Arrangement& g, const Vertex& a, const Vertex& b) {
  return to_text(a, g.n()) + " -> " + to_text(b, g.n());
}

constexpr std::uint64_t kForcedEdgeNodes = 1'000'000;

// Hamiltonian a-b path of one class in which the class vertex x keeps only
// the edges to y, z and w. Empty when the search finds none.
Path path_with_forced_edges(const Arrangement& g, int position, Label label, const Vertex& a,
                            const Vertex& b, const Vertex& x, const std::vector<Vertex>& kept) {
  SubgraphView cls = SubgraphView(g).pinned(position, {label});
  std::vector<Edge> dropped;
  for (const auto& w : cls.neighbors(x)) {
    if (std::find(kept.begin(), kept.end(), w) == kept.end()) dropped.emplace_back(x, w);
  }
  SearchBudget budget = SearchBudget::from_environment();
  // Large classes: fail fast so the caller moves on to the next candidate.
  if (cls.size() > kSearchLimit) budget.max_nodes = std::min<std::uint64_t>(budget.max_nodes, kForcedEdgeNodes);
  SearchResult r = ham_path_search(cls.without_edges(dropped), a, b, budget);
  return r.outcome == SearchOutcome::kFound ? r.path : Path{};
}

// Hamiltonian path of class `label` from a to b that uses an edge whose
// endpoints both lack `next`. Returns the path and the index i of the
// edge (path[i], path[i+1]).
std::pair<Path, std::size_t> split_path(const Arrangement& g, int position, Label label, Label next,
                                        const Vertex& a, const Vertex& b) {
  SubgraphView cls = SubgraphView(g).pinned(position, {label});
  if (cls.size() > kSearchLimit) {
    // Most edges of a large class qualify; look along a plain path first.
    Path p = class_hamiltonian_path(g, position, label, a, b);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!p[i].contains(next) && !p[i + 1].contains(next)) return {p, i};
    }
  }
  for (const auto& x : cls.vertices()) {
    if (x == a || x == b || x.contains(next)) continue;
    std::vector<Vertex> lacking;
    std::vector<Vertex> all = cls.neighbors(x);
    for (const auto& w : all) {
      if (!w.contains(next)) lacking.push_back(w);
    }
    for (std::size_t i = 0; i < lacking.size(); ++i) {
      for (std::size_t j = i + 1; j < lacking.size(); ++j) {
        for (const auto& extra : all) {
          if (extra == lacking[i] || extra == lacking[j]) continue;
          Path p = path_with_forced_edges(g, position, label, a, b, x, {lacking[i], lacking[j], extra});
          if (p.empty()) continue;
          std::size_t at = static_cast<std::size_t>(std::find(p.begin(), p.end(), x) - p.begin());
          // Prefer the edge x-y with y the first chosen neighbor.
          for (const auto& y : {lacking[i], lacking[j]}) {
            if (at > 0 && p[at - 1] == y) return {p, at - 1};
            if (at + 1 < p.size() && p[at + 1] == y) return {p, at};
          }
        }
      }
    }
  }
  throw ConstructionError("no splittable path in class " + std::to_string(label) + " from " +
                          describe(g, a, b));
}

Path union_same_class(const Arrangement& g, int position, const std::vector<Label>& order,
                      const Vertex& u, const Vertex& v) {
  Path head;
  std::vector<Path> tails;
  Vertex s = u;
  Vertex t = v;
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    auto [p, i] = split_path(g, position, order[j], order[j + 1], s, t);
    head.insert(head.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    tails.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.end());
    s = p[i].swapped(order[j], order[j + 1]);
    t = p[i + 1].swapped(order[j], order[j + 1]);
  }
  Path last = class_hamiltonian_path(g, position, order.back(), s, t);
  head.insert(head.end(), last.begin(), last.end());
  for (auto it = tails.rbegin(); it != tails.rend(); ++it) head.insert(head.end(), it->begin(), it->end());
  return head;
}

Path union_distinct_classes(const Arrangement& g, int position, const std::vector<Label>& order,
                            const Vertex& u, const Vertex& v) {
  Path out;
  Vertex entry = u;
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    bool last_link = j + 2 == order.size();
    std::optional<std::pair<Vertex, Vertex>> chosen;
    for (const auto& [x, y] : g.cross_edges(position, order[j], order[j + 1])) {
      if (x == entry || (last_link && y == v)) continue;
      chosen = {x, y};
      break;
    }
    if (!chosen) {
      throw ConstructionError("no usable cross edge between classes " + std::to_string(order[j]) +
                              " and " + std::to_string(order[j + 1]));
    }
    Path part = class_hamiltonian_path(g, position, order[j], entry, chosen->first);
    out.insert(out.end(), part.begin(), part.end());
    entry = chosen->second;
  }
  Path part = class_hamiltonian_path(g, position, order.back(), entry, v);
  out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Tries per link before giving up on a chain of classes.
constexpr int kLinkTries = 4;

Path avoiding_path(const Arrangement& g, const std::vector<Vertex>& removed, const Vertex& a,
                   const Vertex& b);

std::vector<Vertex> removed_in(const std::vector<Vertex>& removed, int position, Label label) {
  std::vector<Vertex> out;
  for (const auto& x : removed) {
    if (x.at(position) == label) out.push_back(x);
  }
  return out;
}

Path class_avoiding(const Arrangement& g, int position, Label label, const std::vector<Vertex>& removed,
                    const Vertex& a, const Vertex& b) {
  std::vector<Vertex> here = removed_in(removed, position, label);
  if (here.empty()) return class_hamiltonian_path(g, position, label, a, b);
  SubgraphView cls = SubgraphView(g).pinned(position, {label}).without_vertices(here);
  if (cls.size() <= kSearchLimit) return view_hamiltonian_path(cls, a, b);
  ClassEmbedding emb(g, position, label);
  std::vector<Vertex> sub_removed;
  for (const auto& x : here) sub_removed.push_back(emb.to_sub(x));
  return emb.to_host(avoiding_path(emb.sub(), sub_removed, emb.to_sub(a), emb.to_sub(b)));
}

// Chains the classes order[j..] from `entry` to b. Each link tries a few
// fault-free cross edges in lexicographic order.
std::optional<Path> chain_avoiding(const Arrangement& g, int position, const std::vector<Label>& order,
                                   std::size_t j, const std::vector<Vertex>& removed, const Vertex& entry,
                                   const Vertex& b) {
  auto is_removed = [&](const Vertex& x) { return std::find(removed.begin(), removed.end(), x) != removed.end(); };
  if (j + 1 == order.size()) {
    try {
      return class_avoiding(g, position, order[j], removed, entry, b);
    } catch (const ConstructionError&) {
      return std::nullopt;
    }
  }
  const bool last_link = j + 2 == order.size();
  int tries = 0;
  for (const auto& [x, y] : g.cross_edges(position, order[j], order[j + 1])) {
    if (x == entry || is_removed(x) || is_removed(y) || (last_link && y == b)) continue;
    if (tries++ == kLinkTries) break;
    Path head;
    try {
      head = class_avoiding(g, position, order[j], removed, entry, x);
    } catch (const ConstructionError&) {
      continue;
    }
    if (auto rest = chain_avoiding(g, position, order, j + 1, removed, y, b)) {
      head.insert(head.end(), rest->begin(), rest->end());
      return head;
    }
  }
  return std::nullopt;
}

// Hamiltonian a-b path of g minus `removed`, split along a position
// where a and b differ.
Path avoiding_path(const Arrangement& g, const std::vector<Vertex>& removed, const Vertex& a,
                   const Vertex& b) {
  if (removed.empty()) return hamiltonian_path(g, a, b);
  SubgraphView rest = SubgraphView(g).without_vertices(removed);
  if (g.k() == 1 || rest.size() <= kSearchLimit) return view_hamiltonian_path(rest, a, b);
  for (int q = 1; q <= g.k(); ++q) {
    if (a.at(q) == b.at(q)) continue;
    std::vector<Label> order{a.at(q)};
    for (Label x = 1; x <= g.n(); ++x) {
      if (x != a.at(q) && x != b.at(q)) order.push_back(x);
    }
    order.push_back(b.at(q));
    if (auto p = chain_avoiding(g, q, order, 0, removed, a, b)) return *p;
  }
  // Every split failed; plain search under the node budget.
  SearchResult r = ham_path_search(rest, a, b);
  if (r.outcome == SearchOutcome::kFound) return r.path;
  throw ConstructionError("no Hamiltonian path avoiding " + std::to_string(removed.size()) + " vertices for " +
                          describe(g, a, b));
}

}  // namespace

Path class_path_avoiding(const Arrangement& g, int position, Label label, const std::vector<Vertex>& removed,
                         const Vertex& a, const Vertex& b) {
  SubgraphView cls = SubgraphView(g).pinned(position, {label}).without_vertices(removed);
  if (!cls.contains(a) || !cls.contains(b)) throw InputError("endpoint outside the class or removed");
  if (a == b) throw InputError("endpoints must differ");
  return class_avoiding(g, position, label, removed, a, b);
}

Path view_hamiltonian_path(const SubgraphView& view, const Vertex& u, const Vertex& v) {
  SearchResult r = ham_path_search(view, u, v);
  if (r.outcome != SearchOutcome::kFound) {
    throw ConstructionError(std::string("Hamiltonian path search ") + to_string(r.outcome) + " for " +
                            describe(view.base(), u, v) + " on " + std::to_string(view.size()) +
                            " vertices");
  }
  return r.path;
}

Path hamiltonian_path(const Arrangement& g, const Vertex& u, const Vertex& v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) throw InputError("endpoints must differ");
  if (g.k() == 1) return complete_graph_path(g.labels(), u, v);
  if (g.vertex_count() <= kSearchLimit) return view_hamiltonian_path(SubgraphView(g), u, v);
  // Any position covers the whole graph; one where the ends differ avoids
  // the forced-edge split.
  int q = g.k();
  while (q > 1 && u.at(q) == v.at(q)) --q;
  return ham_path_union(g, q, g.labels(), u, v);
}

Path class_hamiltonian_path(const Arrangement& g, int position, Label label, const Vertex& a,
                            const Vertex& b) {
  SubgraphView cls = SubgraphView(g).pinned(position, {label});
  if (!cls.contains(a) || !cls.contains(b)) throw InputError("endpoint outside the class");
  if (a == b) throw InputError("endpoints must differ");
  if (g.vertex_count() / static_cast<std::uint64_t>(g.n()) <= kSearchLimit) {
    return view_hamiltonian_path(cls, a, b);
  }
  ClassEmbedding emb(g, position, label);
  return emb.to_host(hamiltonian_path(emb.sub(), emb.to_sub(a), emb.to_sub(b)));
}

Path ham_path_union(const Arrangement& g, int position, std::vector<Label> labels, const Vertex& u,
                    const Vertex& v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (position < 1 || position > g.k()) throw InputError("position out of range");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty() || labels.front() < 1 || labels.back() > g.n()) throw InputError("bad class set");
  Label cu = u.at(position);
  Label cv = v.at(position);
  auto in_set = [&](Label x) { return std::binary_search(labels.begin(), labels.end(), x); };
  if (!in_set(cu) || !in_set(cv)) throw InputError("endpoint outside the union");
  if (u == v) throw InputError("endpoints must differ");

  if (g.k() == 1) return complete_graph_path(labels, u, v);
  if (labels.size() == 1) return class_hamiltonian_path(g, position, cu, u, v);
  if (g.n() < 5) return view_hamiltonian_path(SubgraphView(g).pinned(position, labels), u, v);

  std::vector<Label> order{cu};
  for (Label x : labels) {
    if (x != cu && x != cv) order.push_back(x);
  }
  if (cu != cv) {
    order.push_back(cv);
    return union_distinct_classes(g, position, order, u, v);
  }
  return union_same_class(g, position, order, u, v);
}

}  // namespace spancon
