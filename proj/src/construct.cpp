#include "construct.hpp"

#include <algorithm>

#include "spancon/verify.hpp"

namespace spancon::detail {

Vertex vtx(std::initializer_list<Label> labels) { return Vertex(labels); }

Container finish(const Arrangement& g, const Vertex& u, const Vertex& v, std::vector<Path> paths) {
  Container c{g.n(), g.k(), u, v, static_cast<int>(paths.size()), std::move(paths)};
  ValidationReport report = validate_container(g, c);
  if (!report.ok()) {
    const auto& first = report.issues.front();
    throw ConstructionError(std::string("invalid result (") + to_string(first.code) + "): " + first.message);
  }
  return c;
}

Automorphism reorder_positions(int n, const std::vector<int>& order) {
  std::vector<int> image(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) image[static_cast<std::size_t>(order[j] - 1)] = static_cast<int>(j) + 1;
  return Automorphism::of_positions(n, std::move(image));
}

std::vector<Label> labels_except(int n, const std::vector<Label>& excluded) {
  std::vector<Label> out;
  for (Label x = 1; x <= n; ++x) {
    if (std::find(excluded.begin(), excluded.end(), x) == excluded.end()) out.push_back(x);
  }
  return out;
}

Container class_container(const Arrangement& g, int position, Label label, const Vertex& a,
                          const Vertex& b, int l) {
  ClassEmbedding emb(g, position, label);
  Container inner = container(ContainerRequest{emb.sub(), emb.to_sub(a), emb.to_sub(b), l});
  Container out{g.n(), g.k(), a, b, l, {}};
  for (const auto& p : inner.paths) out.paths.push_back(emb.to_host(p));
  return out;
}

Path class_path(const Arrangement& g, int position, Label label, const Vertex& a, const Vertex& b) {
  return class_hamiltonian_path(g, position, label, a, b);
}

Path union_path(const Arrangement& g, int position, const std::vector<Label>& labels,
                const Vertex& a, const Vertex& b) {
  return ham_path_union(g, position, labels, a, b);
}

std::vector<Path> class_cover(const Arrangement& g, int position, Label label, int t,
                              const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
  ClassEmbedding emb(g, position, label);
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (const auto& x : A) a.push_back(emb.to_sub(x));
  for (const auto& x : B) b.push_back(emb.to_sub(x));
  int sub_t = t < position ? t : t - 1;
  std::vector<Path> out;
  for (const auto& p : disjoint_path_cover(emb.sub(), sub_t, a, b)) out.push_back(emb.to_host(p));
  return out;
}

Spokes Spokes::into(const Container& c) {
  Spokes s;
  s.n_ = c.n;
  for (const auto& p : c.paths) {
    Path head(p.begin(), p.end() - 1);
    s.paths_.emplace(head.back(), std::move(head));
  }
  return s;
}

Spokes Spokes::out_of(const Container& c) {
  Spokes s;
  s.n_ = c.n;
  for (const auto& p : c.paths) {
    Path tail(p.begin() + 1, p.end());
    s.paths_.emplace(tail.front(), std::move(tail));
  }
  return s;
}

const Path& Spokes::at(const Vertex& key) const {
  auto it = paths_.find(key);
  if (it == paths_.end()) throw ConstructionError("no container path through " + to_text(key, n_));
  return it->second;
}

}  // namespace spancon::detail
