#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "spancon/vertex.hpp"

namespace spancon {

// The arrangement graph A(n,k): k-tuples of distinct labels from 1..n,
// adjacent when they differ in exactly one position.
class Arrangement {
 public:
  Arrangement(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  std::uint64_t vertex_count() const;
  int degree() const { return k_ * (n_ - k_); }
  std::uint64_t edge_count() const;
  // Edges between two classes at a fixed position.
  std::uint64_t cross_edge_count() const;

  bool is_vertex(const Vertex& v) const;
  void require_vertex(const Vertex& v) const;
  bool adjacent(const Vertex& a, const Vertex& b) const;
  // Lexicographic order.
  std::vector<Vertex> neighbors(const Vertex& v) const;
  Vertex swap(const Vertex& v, Label old_label, Label new_label) const;

  std::vector<Vertex> vertices() const;
  std::vector<Label> labels() const;

  std::uint64_t rank(const Vertex& v) const;
  Vertex unrank(std::uint64_t r) const;

  // Edges between class i and class j at `position`, ordered by the
  // endpoint in class i.
  std::vector<std::pair<Vertex, Vertex>> cross_edges(int position, Label i, Label j) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int n_;
  int k_;
};

struct Pin {
  int position;
  std::vector<Label> labels;  // sorted, unique
};

using Edge = std::pair<Vertex, Vertex>;

// A region of A(n,k) fixed by pins, minus some vertices and edges.
class SubgraphView {
 public:
  explicit SubgraphView(Arrangement base);

  static SubgraphView whole(const Arrangement& g) { return SubgraphView(g); }

  SubgraphView pinned(int position, std::vector<Label> labels) const;
  SubgraphView without_vertices(const std::vector<Vertex>& vs) const;
  SubgraphView without_edges(const std::vector<Edge>& es) const;

  const Arrangement& base() const { return base_; }
  const std::vector<Pin>& pins() const { return pins_; }

  bool in_region(const Vertex& v) const;
  bool contains(const Vertex& v) const;
  bool has_edge(const Vertex& a, const Vertex& b) const;
  std::vector<Vertex> neighbors(const Vertex& v) const;

  void for_each_vertex(const std::function<void(const Vertex&)>& f) const;
  // Lexicographic order.
  std::vector<Vertex> vertices() const;
  std::size_t size() const;

 private:
  Arrangement base_;
  std::vector<Pin> pins_;
  std::set<Vertex> removed_vertices_;
  std::set<Edge> removed_edges_;
};

// Identifies the class {x : x_position == label} of A(n,k) with A(n-1,k-1)
// by deleting the position and shifting labels above `label` down by one.
class ClassEmbedding {
 public:
  ClassEmbedding(const Arrangement& host, int position, Label label);

  const Arrangement& host() const { return host_; }
  const Arrangement& sub() const { return sub_; }
  int position() const { return position_; }
  Label label() const { return label_; }

  Vertex to_sub(const Vertex& v) const;
  Vertex to_host(const Vertex& v) const;
  Path to_host(const Path& p) const;

 private:
  Arrangement host_;
  Arrangement sub_;
  int position_;
  Label label_;
};

}  // namespace spancon
