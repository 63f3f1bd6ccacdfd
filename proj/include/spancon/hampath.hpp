#pragma once

#include <vector>

#include "spancon/arrangement.hpp"
#include "spancon/search.hpp"

namespace spancon {

// Views up to this many vertices are searched directly.
inline constexpr std::size_t kSearchLimit = 60;

// Hamiltonian u-v path of the view by search. Throws ConstructionError
// when the search fails or runs out of budget.
Path view_hamiltonian_path(const SubgraphView& view, const Vertex& u, const Vertex& v);

// Hamiltonian u-v path of A(n,k).
Path hamiltonian_path(const Arrangement& g, const Vertex& u, const Vertex& v);

// Hamiltonian a-b path of the class {x : x_position == label}.
Path class_hamiltonian_path(const Arrangement& g, int position, Label label, const Vertex& a,
                            const Vertex& b);

// Hamiltonian a-b path of the class minus `removed`, which must lie in the
// class. Small classes are searched; larger ones are split along a
// position where the current ends differ and chained through cross edges
// that avoid the removed vertices.
Path class_path_avoiding(const Arrangement& g, int position, Label label,
                         const std::vector<Vertex>& removed, const Vertex& a, const Vertex& b);

// Hamiltonian u-v path of the union of the classes in `labels` at
// `position`. Both endpoints must lie in the union. Classes are chained
// through cross edges; when u and v share a class, each class is split
// at a chosen edge whose endpoints carry over to the next class.
Path ham_path_union(const Arrangement& g, int position, std::vector<Label> labels,
                    const Vertex& u, const Vertex& v);

}  // namespace spancon
