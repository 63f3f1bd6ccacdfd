#include "spancon/arrangement.hpp"

#include <algorithm>

#include "spancon/error.hpp"

namespace spancon {
namespace {

std::uint64_t falling(int n, int count) {
  std::uint64_t out = 1;
  for (int i = 0; i < count; ++i) out *= static_cast<std::uint64_t>(n - i);
  return out;
}

Edge normalized(const Vertex& a, const Vertex& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Arrangement::Arrangement(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k >= n || n > 32) {
    throw InputError("A(" + std::to_string(n) + "," + std::to_string(k) + ") needs 1 <= k < n <= 32");
  }
}

std::uint64_t Arrangement::vertex_count() const { return falling(n_, k_); }

std::uint64_t Arrangement::edge_count() const {
  return vertex_count() * static_cast<std::uint64_t>(degree()) / 2;
}

std::uint64_t Arrangement::cross_edge_count() const { return falling(n_ - 2, k_ - 1); }

bool Arrangement::is_vertex(const Vertex& v) const {
  if (static_cast<int>(v.size()) != k_) return false;
  std::uint64_t seen = 0;
  for (Label x : v.labels()) {
    if (x < 1 || x > n_) return false;
    if (seen & (1ull << x)) return false;
    seen |= 1ull << x;
  }
  return true;
}

void Arrangement::require_vertex(const Vertex& v) const {
  if (!is_vertex(v)) {
    throw InputError("not a vertex of A(" + std::to_string(n_) + "," + std::to_string(k_) + ")");
  }
}

bool Arrangement::adjacent(const Vertex& a, const Vertex& b) const {
  if (a.size() != b.size()) return false;
  int diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a.labels()[i] != b.labels()[i];
  return diff == 1;
}

std::vector<Vertex> Arrangement::neighbors(const Vertex& v) const {
  require_vertex(v);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (Label x = 1; x <= n_; ++x) {
    if (v.contains(x)) continue;
    for (int p = 1; p <= k_; ++p) out.push_back(v.with(p, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vertex Arrangement::swap(const Vertex& v, Label old_label, Label new_label) const {
  require_vertex(v);
  if (new_label < 1 || new_label > n_) throw InputError("label out of range");
  return v.swapped(old_label, new_label);
}

std::vector<Vertex> Arrangement::vertices() const { return SubgraphView(*this).vertices(); }

std::vector<Label> Arrangement::labels() const {
  std::vector<Label> out;
  for (Label x = 1; x <= n_; ++x) out.push_back(x);
  return out;
}

std::uint64_t Arrangement::rank(const Vertex& v) const {
  require_vertex(v);
  std::uint64_t r = 0;
  std::uint64_t used = 0;
  for (int p = 1; p <= k_; ++p) {
    Label x = v.at(p);
    int smaller_free = 0;
    for (Label y = 1; y < x; ++y) smaller_free += (used & (1ull << y)) == 0;
    r += static_cast<std::uint64_t>(smaller_free) * falling(n_ - p, k_ - p);
    used |= 1ull << x;
  }
  return r;
}

Vertex Arrangement::unrank(std::uint64_t r) const {
  if (r >= vertex_count()) throw InputError("rank out of range");
  std::vector<Label> labels;
  std::uint64_t used = 0;
  for (int p = 1; p <= k_; ++p) {
    std::uint64_t block = falling(n_ - p, k_ - p);
    std::uint64_t idx = r / block;
    r %= block;
    for (Label y = 1; y <= n_; ++y) {
      if (used & (1ull << y)) continue;
      if (idx == 0) {
        labels.push_back(y);
        used |= 1ull << y;
        break;
      }
      --idx;
    }
  }
  return Vertex(std::move(labels));
}

std::vector<std::pair<Vertex, Vertex>> Arrangement::cross_edges(int position, Label i, Label j) const {
  if (position < 1 || position > k_ || i < 1 || i > n_ || j < 1 || j > n_ || i == j) {
    throw InputError("bad cross edge request");
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  SubgraphView(*this).pinned(position, {i}).for_each_vertex([&](const Vertex& x) {
    if (!x.contains(j)) out.emplace_back(x, x.with(position, j));
  });
  return out;
}

SubgraphView::SubgraphView(Arrangement base) : base_(std::move(base)) {}

SubgraphView SubgraphView::pinned(int position, std::vector<Label> labels) const {
  if (position < 1 || position > base_.k()) throw InputError("pin position out of range");
  for (const auto& pin : pins_) {
    if (pin.position == position) throw InputError("position already pinned");
  }
  if (!removed_vertices_.empty() || !removed_edges_.empty()) {
    throw InputError("pins must precede removals");
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (Label x : labels) {
    if (x < 1 || x > base_.n()) throw InputError("pin label out of range");
  }
  SubgraphView out = *this;
  out.pins_.push_back(Pin{position, std::move(labels)});
  return out;
}

SubgraphView SubgraphView::without_vertices(const std::vector<Vertex>& vs) const {
  SubgraphView out = *this;
  for (const auto& v : vs) {
    if (!in_region(v)) throw InputError("removed vertex outside the view");
    out.removed_vertices_.insert(v);
  }
  return out;
}

SubgraphView SubgraphView::without_edges(const std::vector<Edge>& es) const {
  SubgraphView out = *this;
  for (const auto& [a, b] : es) {
    if (!in_region(a) || !in_region(b) || !base_.adjacent(a, b)) {
      throw InputError("removed edge outside the view");
    }
    out.removed_edges_.insert(normalized(a, b));
  }
  return out;
}

bool SubgraphView::in_region(const Vertex& v) const {
  if (!base_.is_vertex(v)) return false;
  for (const auto& pin : pins_) {
    if (!std::binary_search(pin.labels.begin(), pin.labels.end(), v.at(pin.position))) return false;
  }
  return true;
}

bool SubgraphView::contains(const Vertex& v) const {
  return in_region(v) && !removed_vertices_.contains(v);
}

bool SubgraphView::has_edge(const Vertex& a, const Vertex& b) const {
  return contains(a) && contains(b) && base_.adjacent(a, b) &&
         !removed_edges_.contains(normalized(a, b));
}

std::vector<Vertex> SubgraphView::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  if (!contains(v)) return out;
  for (auto& w : base_.neighbors(v)) {
    if (has_edge(v, w)) out.push_back(std::move(w));
  }
  return out;
}

void SubgraphView::for_each_vertex(const std::function<void(const Vertex&)>& f) const {
  const int n = base_.n();
  const int k = base_.k();
  std::vector<const std::vector<Label>*> allowed(static_cast<std::size_t>(k + 1), nullptr);
  for (const auto& pin : pins_) allowed[static_cast<std::size_t>(pin.position)] = &pin.labels;
  std::vector<Label> labels(static_cast<std::size_t>(k));
  std::uint64_t used = 0;
  std::function<void(int)> rec = [&](int p) {
    if (p > k) {
      Vertex v(labels);
      if (!removed_vertices_.contains(v)) f(v);
      return;
    }
    for (Label x = 1; x <= n; ++x) {
      if (used & (1ull << x)) continue;
      const auto* pin = allowed[static_cast<std::size_t>(p)];
      if (pin && !std::binary_search(pin->begin(), pin->end(), x)) continue;
      labels[static_cast<std::size_t>(p - 1)] = x;
      used |= 1ull << x;
      rec(p + 1);
      used &= ~(1ull << x);
    }
  };
  rec(1);
}

std::vector<Vertex> SubgraphView::vertices() const {
  std::vector<Vertex> out;
  for_each_vertex([&](const Vertex& v) { out.push_back(v); });
  return out;
}

std::size_t SubgraphView::size() const {
  std::size_t count = 0;
  for_each_vertex([&](const Vertex&) { ++count; });
  return count;
}

ClassEmbedding::ClassEmbedding(const Arrangement& host, int position, Label label)
    : host_(host), sub_(host.n() - 1, host.k() - 1), position_(position), label_(label) {
  if (position < 1 || position > host.k() || label < 1 || label > host.n()) {
    throw InputError("bad class");
  }
}

Vertex ClassEmbedding::to_sub(const Vertex& v) const {
  host_.require_vertex(v);
  if (v.at(position_) != label_) throw InputError("vertex outside the class");
  std::vector<Label> out;
  for (int p = 1; p <= host_.k(); ++p) {
    if (p == position_) continue;
    Label x = v.at(p);
    out.push_back(x < label_ ? x : x - 1);
  }
  return Vertex(std::move(out));
}

Vertex ClassEmbedding::to_host(const Vertex& v) const {
  sub_.require_vertex(v);
  std::vector<Label> out;
  for (int p = 1, q = 1; p <= host_.k(); ++p) {
    if (p == position_) {
      out.push_back(label_);
    } else {
      Label x = v.at(q++);
      out.push_back(x < label_ ? x : x + 1);
    }
  }
  return Vertex(std::move(out));
}

Path ClassEmbedding::to_host(const Path& p) const {
  Path out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(to_host(v));
  return out;
}

}  // namespace spancon
