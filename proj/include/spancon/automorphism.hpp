#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spancon/arrangement.hpp"

namespace spancon {

// A label permutation combined with a position permutation. Both preserve
// adjacency in A(n,k).
class Automorphism {
 public:
  // position_image[i-1] is the new position of position i;
  // label_image[x-1] is the image of label x.
  Automorphism(std::vector<int> position_image, std::vector<Label> label_image);

  static Automorphism identity(int n, int k);
  static Automorphism of_labels(int k, std::vector<Label> label_image);
  static Automorphism of_positions(int n, std::vector<int> position_image);

  Vertex apply(const Vertex& v) const;
  Path apply(const Path& p) const;
  Automorphism inverse() const;
  // First this, then next.
  Automorphism then(const Automorphism& next) const;

 private:
  std::vector<int> position_image_;
  std::vector<Label> label_image_;
};

// Label permutation of 1..n sending each key of `fixed` to its value and
// the remaining labels, in ascending order, to the remaining images in
// ascending order.
std::vector<Label> extend_label_map(int n, const std::map<Label, Label>& fixed);

// A vertex bijection, either an automorphism or an explicit table.
class VertexMapping {
 public:
  explicit VertexMapping(Automorphism a) : automorphism_(std::move(a)) {}
  explicit VertexMapping(std::map<Vertex, Vertex> table) : table_(std::move(table)) {}

  Vertex operator()(const Vertex& v) const;
  Path operator()(const Path& p) const;

 private:
  std::optional<Automorphism> automorphism_;
  std::map<Vertex, Vertex> table_;
};

// An automorphism f of g with f(u0)=u and f(v0)=v, or nothing when none
// exists. Tries label permutations first; on graphs with at most 24
// vertices falls back to an exhaustive search over all bijections.
std::optional<VertexMapping> automorphism_transport(const Arrangement& g, const Vertex& u0,
                                                    const Vertex& v0, const Vertex& u,
                                                    const Vertex& v);

}  // namespace spancon
