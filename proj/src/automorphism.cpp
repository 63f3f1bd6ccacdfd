#include "spancon/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "spancon/error.hpp"

namespace spancon {
namespace {

bool is_permutation_of_1_to(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<int> iota_from_1(int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

// Backtracking over vertex bijections that preserve adjacency.
class BijectionSearch {
 public:
  BijectionSearch(const Arrangement& g, const Vertex& u0, const Vertex& v0, const Vertex& u,
                  const Vertex& v)
      : vertices_(g.vertices()), adjacency_(vertices_.size() * vertices_.size(), 0) {
    const std::size_t count = vertices_.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        adjacency_[i * count + j] = g.adjacent(vertices_[i], vertices_[j]);
      }
    }
    image_.assign(count, -1);
    taken_.assign(count, 0);
    fixed_ = {{index(u0), index(u)}, {index(v0), index(v)}};
  }

  std::optional<std::map<Vertex, Vertex>> run() {
    for (auto [from, to] : fixed_) {
      if (!assign(from, to)) return std::nullopt;
    }
    if (!extend(0)) return std::nullopt;
    std::map<Vertex, Vertex> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      out.emplace(vertices_[i], vertices_[static_cast<std::size_t>(image_[i])]);
    }
    return out;
  }

 private:
  int index(const Vertex& x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    return static_cast<int>(it - vertices_.begin());
  }

  bool adj(int a, int b) const {
    return adjacency_[static_cast<std::size_t>(a) * vertices_.size() + static_cast<std::size_t>(b)];
  }

  bool consistent(int from, int to) const {
    for (std::size_t other = 0; other < vertices_.size(); ++other) {
      int img = image_[other];
      if (img < 0) continue;
      if (adj(from, static_cast<int>(other)) != adj(to, img)) return false;
    }
    return true;
  }

  bool assign(int from, int to) {
    if (image_[static_cast<std::size_t>(from)] >= 0) return image_[static_cast<std::size_t>(from)] == to;
    if (taken_[static_cast<std::size_t>(to)] || !consistent(from, to)) return false;
    image_[static_cast<std::size_t>(from)] = to;
    taken_[static_cast<std::size_t>(to)] = 1;
    return true;
  }

  bool extend(std::size_t from) {
    while (from < vertices_.size() && image_[from] >= 0) ++from;
    if (from == vertices_.size()) return true;
    for (std::size_t to = 0; to < vertices_.size(); ++to) {
      if (taken_[to] || !consistent(static_cast<int>(from), static_cast<int>(to))) continue;
      image_[from] = static_cast<int>(to);
      taken_[to] = 1;
      if (extend(from + 1)) return true;
      image_[from] = -1;
      taken_[to] = 0;
    }
    return false;
  }

  std::vector<Vertex> vertices_;
  std::vector<char> adjacency_;
  std::vector<int> image_;
  std::vector<char> taken_;
  std::vector<std::pair<int, int>> fixed_;
};

}  // namespace

Automorphism::Automorphism(std::vector<int> position_image, std::vector<Label> label_image)
    : position_image_(std::move(position_image)), label_image_(std::move(label_image)) {
  if (!is_permutation_of_1_to(position_image_) || !is_permutation_of_1_to(label_image_)) {
    throw InputError("automorphism needs two permutations");
  }
}

Automorphism Automorphism::identity(int n, int k) { return Automorphism(iota_from_1(k), iota_from_1(n)); }

Automorphism Automorphism::of_labels(int k, std::vector<Label> label_image) {
  return Automorphism(iota_from_1(k), std::move(label_image));
}

Automorphism Automorphism::of_positions(int n, std::vector<int> position_image) {
  return Automorphism(std::move(position_image), iota_from_1(n));
}

Vertex Automorphism::apply(const Vertex& v) const {
  if (v.size() != position_image_.size()) throw InputError("vertex size mismatch");
  std::vector<Label> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Label x = v.labels()[i];
    if (x < 1 || x > static_cast<Label>(label_image_.size())) throw InputError("label out of range");
    out[static_cast<std::size_t>(position_image_[i] - 1)] = label_image_[static_cast<std::size_t>(x - 1)];
  }
  return Vertex(std::move(out));
}

Path Automorphism::apply(const Path& p) const {
  Path out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(apply(v));
  return out;
}

Automorphism Automorphism::inverse() const {
  std::vector<int> pos(position_image_.size());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[static_cast<std::size_t>(position_image_[i] - 1)] = static_cast<int>(i) + 1;
  std::vector<Label> lab(label_image_.size());
  for (std::size_t i = 0; i < lab.size(); ++i) lab[static_cast<std::size_t>(label_image_[i] - 1)] = static_cast<Label>(i) + 1;
  return Automorphism(std::move(pos), std::move(lab));
}

Automorphism Automorphism::then(const Automorphism& next) const {
  std::vector<int> pos(position_image_.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    pos[i] = next.position_image_[static_cast<std::size_t>(position_image_[i] - 1)];
  }
  std::vector<Label> lab(label_image_.size());
  for (std::size_t i = 0; i < lab.size(); ++i) {
    lab[i] = next.label_image_[static_cast<std::size_t>(label_image_[i] - 1)];
  }
  return Automorphism(std::move(pos), std::move(lab));
}

std::vector<Label> extend_label_map(int n, const std::map<Label, Label>& fixed) {
  std::vector<Label> image(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  for (auto [from, to] : fixed) {
    if (from < 1 || from > n || to < 1 || to > n || used[static_cast<std::size_t>(to)]) {
      throw InputError("label map is not injective");
    }
    image[static_cast<std::size_t>(from - 1)] = to;
    used[static_cast<std::size_t>(to)] = 1;
  }
  Label next = 1;
  for (Label x = 1; x <= n; ++x) {
    if (image[static_cast<std::size_t>(x - 1)] != 0) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    image[static_cast<std::size_t>(x - 1)] = next;
    used[static_cast<std::size_t>(next)] = 1;
  }
  return image;
}

Vertex VertexMapping::operator()(const Vertex& v) const {
  if (automorphism_) return automorphism_->apply(v);
  auto it = table_.find(v);
  if (it == table_.end()) throw InputError("vertex outside the mapping");
  return it->second;
}

Path VertexMapping::operator()(const Path& p) const {
  Path out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back((*this)(v));
  return out;
}

std::optional<VertexMapping> automorphism_transport(const Arrangement& g, const Vertex& u0,
                                                    const Vertex& v0, const Vertex& u,
                                                    const Vertex& v) {
  for (const auto* x : {&u0, &v0, &u, &v}) g.require_vertex(*x);
  if ((u0 == v0) != (u == v)) return std::nullopt;

  // A label permutation is determined on the labels of u0 and v0.
  std::map<Label, Label> fixed;
  bool ok = true;
  auto bind = [&](const Vertex& from, const Vertex& to) {
    for (std::size_t i = 0; i < from.size() && ok; ++i) {
      Label a = from.labels()[i];
      Label b = to.labels()[i];
      auto [it, inserted] = fixed.emplace(a, b);
      if (!inserted && it->second != b) ok = false;
    }
  };
  bind(u0, u);
  bind(v0, v);
  if (ok) {
    std::vector<char> seen(static_cast<std::size_t>(g.n() + 1), 0);
    for (auto [from, to] : fixed) {
      if (seen[static_cast<std::size_t>(to)]) ok = false;
      seen[static_cast<std::size_t>(to)] = 1;
    }
  }
  if (ok) return VertexMapping(Automorphism::of_labels(g.k(), extend_label_map(g.n(), fixed)));

  if (g.vertex_count() > 24) return std::nullopt;
  auto table = BijectionSearch(g, u0, v0, u, v).run();
  if (!table) return std::nullopt;
  return VertexMapping(std::move(*table));
}

}  // namespace spancon
