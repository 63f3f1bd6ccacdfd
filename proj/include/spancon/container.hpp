#pragma once

#include <vector>

#include "spancon/arrangement.hpp"

namespace spancon {

// l internally disjoint u-v paths that together cover every vertex.
struct Container {
  int n = 0;
  int k = 0;
  Vertex u;
  Vertex v;
  int l = 0;
  std::vector<Path> paths;

  friend bool operator==(const Container&, const Container&) = default;
};

struct ContainerRequest {
  Arrangement g;
  Vertex u;
  Vertex v;
  int l;
};

}  // namespace spancon
