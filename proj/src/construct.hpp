#pragma once

// Shared helpers for the container constructions.

#include <map>
#include <vector>

#include "spancon/containers.hpp"
#include "spancon/error.hpp"
#include "spancon/hampath.hpp"

namespace spancon::detail {

inline void append(Path& out, const Vertex& x) { out.push_back(x); }
inline void append(Path& out, const Path& p) { out.insert(out.end(), p.begin(), p.end()); }

template <typename... Parts>
Path join(const Parts&... parts) {
  Path out;
  (append(out, parts), ...);
  return out;
}

Vertex vtx(std::initializer_list<Label> labels);

// Validates and packages the paths; throws ConstructionError when invalid.
Container finish(const Arrangement& g, const Vertex& u, const Vertex& v, std::vector<Path> paths);

// Builds with canonical endpoints phi(u), phi(v) and maps the paths back.
template <typename Build>
Container via(const Arrangement& g, const Automorphism& phi, const Vertex& u, const Vertex& v,
              Build build) {
  std::vector<Path> paths = build(phi.apply(u), phi.apply(v));
  Automorphism back = phi.inverse();
  for (auto& p : paths) p = back.apply(p);
  return finish(g, u, v, std::move(paths));
}

// Position permutation listing the old positions in their new order.
Automorphism reorder_positions(int n, const std::vector<int>& order);

// Labels 1..n not in `excluded`, ascending.
std::vector<Label> labels_except(int n, const std::vector<Label>& excluded);

Container class_container(const Arrangement& g, int position, Label label, const Vertex& a,
                          const Vertex& b, int l);
Path class_path(const Arrangement& g, int position, Label label, const Vertex& a, const Vertex& b);
Path union_path(const Arrangement& g, int position, const std::vector<Label>& labels,
                const Vertex& a, const Vertex& b);
// Disjoint path cover inside one class at position `position`; t < position.
std::vector<Path> class_cover(const Arrangement& g, int position, Label label, int t,
                              const std::vector<Vertex>& A, const std::vector<Vertex>& B);

// The paths of a container whose paths all end at (or start from) a common
// hub, keyed by the hub's neighbor on each path. The hub is dropped.
class Spokes {
 public:
  static Spokes into(const Container& c);
  static Spokes out_of(const Container& c);

  const Path& at(const Vertex& key) const;
  const std::map<Vertex, Path>& all() const { return paths_; }

 private:
  int n_ = 0;
  std::map<Vertex, Path> paths_;
};

}  // namespace spancon::detail
