#pragma once

#include <cstdint>

#include "spancon/arrangement.hpp"

namespace spancon {

struct SearchBudget {
  static constexpr std::uint64_t kDefaultNodes = 50'000'000;

  std::uint64_t max_nodes = kDefaultNodes;

  // SPANCON_BUDGET overrides the default node limit when set.
  static SearchBudget from_environment();
};

enum class SearchOutcome { kFound, kNotFound, kBudgetExceeded };

const char* to_string(SearchOutcome outcome);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::kNotFound;
  Path path;
  std::uint64_t nodes_expanded = 0;
};

// Depth-first search for a Hamiltonian u-v path of the view. The path
// grows from both ends; candidates with fewer unvisited neighbors are
// tried first, ties in lexicographic order.
SearchResult ham_path_search(const SubgraphView& view, const Vertex& u, const Vertex& v,
                             SearchBudget budget = SearchBudget::from_environment());

}  // namespace spancon
