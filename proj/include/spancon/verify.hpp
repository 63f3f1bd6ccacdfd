#pragma once

#include <string>
#include <vector>

#include "spancon/container.hpp"

namespace spancon {

enum class ValidationCode { kNotPath, kNotDisjoint, kNotSpanning, kBadEndpoints, kDuplicateVertex };

const char* to_string(ValidationCode code);

struct ValidationIssue {
  ValidationCode code;
  int path_index;  // -1 when the issue is not tied to one path
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool has(ValidationCode code) const;
};

// Checks that every path runs from u to v along edges of the host without
// repeating a vertex, that paths share no internal vertex, that there are
// exactly l of them, and (optionally) that they cover the host.
ValidationReport validate_container(const Arrangement& g, const Container& c,
                                    bool require_spanning = true);
ValidationReport validate_container(const SubgraphView& view, const Container& c,
                                    bool require_spanning = true);
ValidationReport validate_hamiltonian_path(const SubgraphView& view, const Path& p, const Vertex& u,
                                           const Vertex& v);

// Exhaustive searches kept separate from the constructions.
// oracle_ham_path accepts views of at most 60 vertices,
// oracle_container_exists graphs of at most 24 vertices.
bool oracle_ham_path(const SubgraphView& view, const Vertex& u, const Vertex& v);
bool oracle_container_exists(const Arrangement& g, const Vertex& u, const Vertex& v, int l);

}  // namespace spancon
