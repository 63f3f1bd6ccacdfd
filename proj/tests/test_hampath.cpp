#include <gtest/gtest.h>

#include "spancon/error.hpp"
#include "spancon/hampath.hpp"
#include "spancon/verify.hpp"

using namespace spancon;

namespace {

// Parity of the permutation of 1..4 that a vertex of A(4,3) completes to;
// adjacent vertices have opposite parity.
bool star_parity(const Vertex& x) {
  std::vector<Label> p(x.labels().begin(), x.labels().end());
  for (Label a = 1; a <= 4; ++a) {
    if (!x.contains(a)) p.push_back(a);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

// Lengths of the maximal runs of equal labels at `position` along p.
std::vector<std::pair<Label, int>> runs(const Path& p, int position) {
  std::vector<std::pair<Label, int>> out;
  for (const auto& x : p) {
    if (out.empty() || out.back().first != x.at(position)) out.emplace_back(x.at(position), 0);
    ++out.back().second;
  }
  return out;
}

void expect_hamiltonian(const SubgraphView& w, const Path& p, const Vertex& u, const Vertex& v) {
  auto r = validate_hamiltonian_path(w, p, u, v);
  EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.issues.front().message);
}

}  // namespace

TEST(Search, FindsPathInA42) {
  SubgraphView w(Arrangement(4, 2));
  auto r = ham_path_search(w, {1, 2}, {1, 3});
  ASSERT_EQ(r.outcome, SearchOutcome::kFound);
  EXPECT_EQ(r.path.size(), 12u);
  expect_hamiltonian(w, r.path, {1, 2}, {1, 3});
}

TEST(Search, Triangle) {
  auto r = ham_path_search(SubgraphView(Arrangement(3, 1)), {1}, {2});
  ASSERT_EQ(r.outcome, SearchOutcome::kFound);
  EXPECT_EQ(r.path, (Path{{1}, {3}, {2}}));
}

TEST(Search, StarGraphSameParity) {
  SubgraphView w(Arrangement(4, 3));
  // 231 completes to 2314, an even permutation like 1234.
  ASSERT_EQ(star_parity({1, 2, 3}), star_parity({2, 3, 1}));
  EXPECT_EQ(ham_path_search(w, {1, 2, 3}, {2, 3, 1}).outcome, SearchOutcome::kNotFound);
  // Opposite parts are joined.
  ASSERT_NE(star_parity({1, 2, 3}), star_parity({2, 1, 3}));
  EXPECT_EQ(ham_path_search(w, {1, 2, 3}, {2, 1, 3}).outcome, SearchOutcome::kFound);
}

TEST(Search, RejectsBadEndpoints) {
  SubgraphView w(Arrangement(4, 2));
  EXPECT_THROW(ham_path_search(w, {1, 2}, {1, 2}), InputError);
  EXPECT_THROW(ham_path_search(w.pinned(2, {1}), {1, 2}, {2, 1}), InputError);
}

TEST(Search, BudgetExceeded) {
  auto r = ham_path_search(SubgraphView(Arrangement(5, 3)), {1, 2, 3}, {4, 5, 1}, SearchBudget{3});
  EXPECT_EQ(r.outcome, SearchOutcome::kBudgetExceeded);
  EXPECT_TRUE(r.path.empty());
}

TEST(Search, HonorsVertexAndEdgeRemovals) {
  Arrangement g(5, 2);
  SubgraphView w = SubgraphView(g).without_vertices({{3, 4}, {5, 1}}).without_edges({{{1, 2}, {1, 3}}, {{2, 1}, {2, 3}}});
  auto r = ham_path_search(w, {1, 2}, {2, 1});
  ASSERT_EQ(r.outcome, SearchOutcome::kFound);
  expect_hamiltonian(w, r.path, {1, 2}, {2, 1});
}

TEST(Search, AgreesWithOracleOnA42) {
  SubgraphView w(Arrangement(4, 2));
  for (const auto& u : w.vertices()) {
    for (const auto& v : w.vertices()) {
      if (u == v) continue;
      auto r = ham_path_search(w, u, v);
      EXPECT_EQ(r.outcome == SearchOutcome::kFound, oracle_ham_path(w, u, v));
    }
  }
}

TEST(Union, SingleClassOfA42) {
  Arrangement g(4, 2);
  EXPECT_EQ(ham_path_union(g, 2, {1}, {2, 1}, {3, 1}), (Path{{2, 1}, {4, 1}, {3, 1}}));
}

TEST(Union, DistinctClassesRunContiguously) {
  Arrangement g(5, 2);
  Path p = ham_path_union(g, 2, {1, 2}, {1, 2}, {2, 1});
  expect_hamiltonian(SubgraphView(g).pinned(2, {1, 2}), p, {1, 2}, {2, 1});
  EXPECT_EQ(runs(p, 2), (std::vector<std::pair<Label, int>>{{2, 4}, {1, 4}}));
}

TEST(Union, SameClassLeavesAndReturnsOnce) {
  Arrangement g(5, 2);
  SubgraphView w = SubgraphView(g).pinned(2, {1, 2});
  Path p = ham_path_union(g, 2, {1, 2}, {2, 1}, {3, 1});
  expect_hamiltonian(w, p, {2, 1}, {3, 1});
  auto r = runs(p, 2);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].first, 1);
  EXPECT_EQ(r[1], (std::pair<Label, int>{2, 4}));
  EXPECT_EQ(r[2].first, 1);
}

TEST(Union, RunsCoverEachClassInCaseOne) {
  Arrangement g(6, 3);
  Path p = ham_path_union(g, 3, {1, 4, 6}, {2, 3, 1}, {1, 2, 6});
  expect_hamiltonian(SubgraphView(g).pinned(3, {1, 4, 6}), p, {2, 3, 1}, {1, 2, 6});
  auto r = runs(p, 3);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r.front().first, 1);
  EXPECT_EQ(r.back().first, 6);
  for (const auto& [label, len] : r) EXPECT_EQ(len, 20);
}

TEST(Union, ExhaustiveOnA52) {
  Arrangement g(5, 2);
  for (int p = 1; p <= 2; ++p) {
    for (int mask = 1; mask < 32; ++mask) {
      std::vector<Label> I;
      for (Label x = 1; x <= 5; ++x) {
        if (mask >> (x - 1) & 1) I.push_back(x);
      }
      SubgraphView w = SubgraphView(g).pinned(p, I);
      auto vs = w.vertices();
      for (const auto& u : vs) {
        for (const auto& v : vs) {
          if (u == v) continue;
          Path path = ham_path_union(g, p, I, u, v);
          ASSERT_TRUE(validate_hamiltonian_path(w, path, u, v).ok())
              << "p=" << p << " mask=" << mask << " " << to_text(u, 5) << "->" << to_text(v, 5);
          ASSERT_TRUE(oracle_ham_path(w, u, v));
        }
      }
    }
  }
}

// Two or three classes of A(4,2) are not Hamiltonian connected; the
// builder searches there and fails exactly when no path exists.
TEST(Union, AgreesWithOracleOnA42) {
  Arrangement g(4, 2);
  int missing = 0;
  for (int p = 1; p <= 2; ++p) {
    for (int mask = 1; mask < 16; ++mask) {
      std::vector<Label> I;
      for (Label x = 1; x <= 4; ++x) {
        if (mask >> (x - 1) & 1) I.push_back(x);
      }
      SubgraphView w = SubgraphView(g).pinned(p, I);
      for (const auto& u : w.vertices()) {
        for (const auto& v : w.vertices()) {
          if (u == v) continue;
          if (oracle_ham_path(w, u, v)) {
            ASSERT_TRUE(validate_hamiltonian_path(w, ham_path_union(g, p, I, u, v), u, v).ok());
          } else {
            ASSERT_NE(I.size(), 1u);
            ASSERT_NE(I.size(), 4u);
            ASSERT_THROW(ham_path_union(g, p, I, u, v), ConstructionError);
            ++missing;
          }
        }
      }
    }
  }
  EXPECT_GT(missing, 0);
}

TEST(Union, Deterministic) {
  Arrangement g(6, 2);
  EXPECT_EQ(ham_path_union(g, 1, {2, 3, 5}, {2, 1}, {2, 4}), ham_path_union(g, 1, {2, 3, 5}, {2, 1}, {2, 4}));
}

TEST(Union, RejectsEndpointsOutsideUnion) {
  Arrangement g(5, 2);
  EXPECT_THROW(ham_path_union(g, 2, {1, 2}, {1, 3}, {2, 1}), InputError);
  EXPECT_THROW(ham_path_union(g, 2, {1, 2}, {2, 1}, {2, 1}), InputError);
}

TEST(HamiltonianPath, WholeGraphBeyondSearchLimit) {
  Arrangement g(6, 3);
  Path p = hamiltonian_path(g, {1, 2, 3}, {3, 2, 1});
  expect_hamiltonian(SubgraphView(g), p, {1, 2, 3}, {3, 2, 1});
}

TEST(HamiltonianPath, EndsSharingLastLabel) {
  // 2520 vertices; the ends agree in the last position only.
  Arrangement g(7, 5);
  Path p = hamiltonian_path(g, {6, 2, 5, 4, 7}, {5, 2, 1, 3, 7});
  expect_hamiltonian(SubgraphView(g), p, {6, 2, 5, 4, 7}, {5, 2, 1, 3, 7});
}

TEST(HamiltonianPath, ClassPath) {
  Arrangement g(6, 4);
  Path p = class_hamiltonian_path(g, 2, 5, {1, 5, 2, 3}, {6, 5, 4, 1});
  expect_hamiltonian(SubgraphView(g).pinned(2, {5}), p, {1, 5, 2, 3}, {6, 5, 4, 1});
}

TEST(HamiltonianPath, AvoidingSearchedClass) {
  Arrangement g(6, 3);
  std::vector<Vertex> removed{{1, 2, 6}, {3, 4, 6}, {5, 1, 6}};
  Path p = class_path_avoiding(g, 3, 6, removed, {1, 3, 6}, {2, 1, 6});
  expect_hamiltonian(SubgraphView(g).pinned(3, {6}).without_vertices(removed), p, {1, 3, 6}, {2, 1, 6});
}

TEST(HamiltonianPath, AvoidingLargeClass) {
  // 120 vertices per class: split and chained rather than searched.
  Arrangement g(7, 4);
  std::vector<Vertex> removed{{1, 2, 3, 7}, {2, 1, 3, 7}, {6, 5, 4, 7}, {4, 6, 1, 7}, {1, 5, 2, 7}};
  SubgraphView w = SubgraphView(g).pinned(4, {7}).without_vertices(removed);
  ASSERT_GT(w.size(), kSearchLimit);
  Path p = class_path_avoiding(g, 4, 7, removed, {1, 2, 4, 7}, {1, 3, 2, 7});
  expect_hamiltonian(w, p, {1, 2, 4, 7}, {1, 3, 2, 7});
}

TEST(HamiltonianPath, AvoidingRejectsRemovedEndpoint) {
  Arrangement g(6, 3);
  EXPECT_THROW(class_path_avoiding(g, 3, 6, {{1, 2, 6}}, {1, 2, 6}, {2, 1, 6}), InputError);
  EXPECT_THROW(class_path_avoiding(g, 3, 6, {}, {1, 2, 5}, {2, 1, 6}), InputError);
}
