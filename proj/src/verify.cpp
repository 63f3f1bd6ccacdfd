#include "spancon/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spancon {
namespace {

void add(ValidationReport& r, ValidationCode code, int path, std::string message) {
  r.issues.push_back({code, path, std::move(message)});
}

}  // namespace

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::kNotPath: return "NOT_PATH";
    case ValidationCode::kNotDisjoint: return "NOT_DISJOINT";
    case ValidationCode::kNotSpanning: return "NOT_SPANNING";
    case ValidationCode::kBadEndpoints: return "BAD_ENDPOINTS";
    case ValidationCode::kDuplicateVertex: return "DUPLICATE_VERTEX";
  }
  return "?";
}

bool ValidationReport::has(ValidationCode code) const {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.code == code; });
}

ValidationReport validate_container(const Arrangement& g, const Container& c, bool require_spanning) {
  return validate_container(SubgraphView(g), c, require_spanning);
}

ValidationReport validate_container(const SubgraphView& view, const Container& c,
                                    bool require_spanning) {
  ValidationReport r;
  const Arrangement& g = view.base();
  const int n = g.n();
  if (c.n != g.n() || c.k != g.k()) {
    add(r, ValidationCode::kNotPath, -1, "container is for a different graph");
    return r;
  }
  if (!view.contains(c.u) || !view.contains(c.v) || c.u == c.v) {
    add(r, ValidationCode::kBadEndpoints, -1, "u and v must be distinct vertices of the graph");
  }
  if (static_cast<int>(c.paths.size()) != c.l) {
    add(r, ValidationCode::kNotPath, -1,
        "declared l=" + std::to_string(c.l) + " but found " + std::to_string(c.paths.size()) + " paths");
  }

  std::map<Vertex, int> owner;
  std::set<Path> seen_paths;
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const Path& p = c.paths[i];
    const int idx = static_cast<int>(i);
    if (p.size() < 2 || p.front() != c.u || p.back() != c.v) {
      add(r, ValidationCode::kBadEndpoints, idx, "path " + std::to_string(i) + " does not run from u to v");
    }
    std::set<Vertex> inside;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!view.contains(p[j])) {
        add(r, ValidationCode::kNotPath, idx, "path " + std::to_string(i) + " leaves the graph at " + to_text(p[j], n));
      } else if (j > 0 && view.contains(p[j - 1]) && !view.has_edge(p[j - 1], p[j])) {
        add(r, ValidationCode::kNotPath, idx,
            "path " + std::to_string(i) + ": " + to_text(p[j - 1], n) + " and " + to_text(p[j], n) + " are not adjacent");
      }
      if (!inside.insert(p[j]).second) {
        add(r, ValidationCode::kDuplicateVertex, idx, "path " + std::to_string(i) + " repeats " + to_text(p[j], n));
      }
    }
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (p[j] == c.u || p[j] == c.v) continue;
      auto [it, inserted] = owner.emplace(p[j], idx);
      if (!inserted && it->second != idx) {
        add(r, ValidationCode::kNotDisjoint, idx,
            "paths " + std::to_string(it->second) + " and " + std::to_string(i) + " share " + to_text(p[j], n));
      }
    }
    if (!seen_paths.insert(p).second) {
      add(r, ValidationCode::kNotDisjoint, idx, "path " + std::to_string(i) + " is listed twice");
    }
  }

  if (require_spanning) {
    std::size_t missing = 0;
    std::string example;
    view.for_each_vertex([&](const Vertex& x) {
      if (x == c.u || x == c.v || owner.contains(x)) return;
      if (missing++ == 0) example = to_text(x, n);
    });
    if (missing > 0) {
      add(r, ValidationCode::kNotSpanning, -1,
          std::to_string(missing) + " vertices uncovered, e.g. " + example);
    }
  }
  return r;
}

ValidationReport validate_hamiltonian_path(const SubgraphView& view, const Path& p, const Vertex& u,
                                           const Vertex& v) {
  Container c{view.base().n(), view.base().k(), u, v, 1, {p}};
  return validate_container(view, c, true);
}

}  // namespace spancon
