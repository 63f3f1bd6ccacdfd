#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "spancon/containers.hpp"
#include "spancon/error.hpp"
#include "spancon/verify.hpp"

using namespace spancon;

namespace {

Path P(std::initializer_list<int> xs, int n = 5) {
  Path p;
  for (int x : xs) p.push_back(parse_vertex(std::to_string(x), n));
  return p;
}

void expect_valid(const Arrangement& g, const Container& c) {
  auto r = validate_container(g, c);
  EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.issues.front().message);
}

Container build(int n, int k, const Vertex& u, const Vertex& v, int l) {
  Arrangement g(n, k);
  Container c = container({g, u, v, l});
  expect_valid(g, c);
  EXPECT_EQ(c.l, l);
  EXPECT_EQ(static_cast<int>(c.paths.size()), l);
  return c;
}

// Paths are disjoint, cover g, and join A to B one-to-one.
void expect_cover(const Arrangement& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B,
                  const std::vector<Path>& paths) {
  ASSERT_EQ(paths.size(), A.size());
  std::set<Vertex> seen;
  std::multiset<Vertex> starts;
  std::multiset<Vertex> ends;
  for (const auto& p : paths) {
    ASSERT_FALSE(p.empty());
    starts.insert(p.front());
    ends.insert(p.back());
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_TRUE(seen.insert(p[i]).second) << to_text(p[i], g.n());
      if (i > 0) EXPECT_TRUE(g.adjacent(p[i - 1], p[i]));
    }
  }
  EXPECT_EQ(starts, std::multiset<Vertex>(A.begin(), A.end()));
  EXPECT_EQ(ends, std::multiset<Vertex>(B.begin(), B.end()));
  EXPECT_EQ(seen.size(), g.vertex_count());
}

}  // namespace

TEST(BaseTable, StoredRows) {
  auto c = base_table_a42({1, 2}, {1, 3}, 3);
  EXPECT_EQ(c.paths, (std::vector<Path>{P({12, 13}, 4), P({12, 14, 13}, 4),
                                        P({12, 42, 43, 41, 21, 31, 32, 34, 24, 23, 13}, 4)}));
  c = base_table_a42({1, 2}, {2, 1}, 4);
  EXPECT_EQ(c.paths, (std::vector<Path>{P({12, 13, 43, 23, 21}, 4), P({12, 14, 34, 24, 21}, 4),
                                        P({12, 32, 31, 21}, 4), P({12, 42, 41, 21}, 4)}));
  c = base_table_a42({1, 2}, {3, 4}, 3);
  EXPECT_EQ(c.paths, (std::vector<Path>{P({12, 14, 34}, 4), P({12, 42, 32, 34}, 4),
                                        P({12, 13, 43, 23, 24, 21, 41, 31, 34}, 4)}));
  EXPECT_EQ(a42_tables().size(), 8u);
}

TEST(BaseTable, EveryPairOfA42) {
  Arrangement g(4, 2);
  for (const auto& u : g.vertices()) {
    for (const auto& v : g.vertices()) {
      if (u == v) continue;
      for (int l : {3, 4}) {
        Container c = base_table_a42(u, v, l);
        EXPECT_EQ(c.u, u);
        EXPECT_EQ(c.v, v);
        expect_valid(g, c);
      }
    }
  }
  EXPECT_THROW(base_table_a42({1, 2}, {1, 2}, 3), InputError);
  EXPECT_THROW(base_table_a42({1, 2}, {1, 3}, 2), InputError);
}

TEST(BaseTable, DisjointPairOfA52) {
  const auto& t = a52_disjoint_tables();
  ASSERT_EQ(t.size(), 3u);
  // The long path ends 24 34; the vertex 54 sits on the third path so that
  // each step changes one position.
  EXPECT_EQ(t[0].paths, (std::vector<Path>{P({12, 14, 34}), P({12, 32, 34}), P({12, 52, 54, 34}),
                                           P({12, 42, 43, 13, 53, 23, 21, 31, 51, 41, 45, 35, 15, 25, 24, 34})}));
  EXPECT_EQ(t[1].paths, (std::vector<Path>{P({12, 14, 34}), P({12, 15, 25, 45, 35, 34}), P({12, 32, 34}),
                                           P({12, 52, 54, 34}), P({12, 42, 43, 23, 13, 53, 51, 41, 31, 21, 24, 34})}));
  EXPECT_EQ(t[2].paths, (std::vector<Path>{P({12, 14, 34}), P({12, 13, 53, 43, 23, 24, 34}),
                                           P({12, 15, 25, 45, 35, 34}), P({12, 32, 34}),
                                           P({12, 42, 41, 51, 21, 31, 34}), P({12, 52, 54, 34})}));
  for (const auto& c : t) expect_valid(Arrangement(5, 2), c);
  EXPECT_EQ(container({Arrangement(5, 2), {1, 2}, {3, 4}, 6}), t[2]);
}

TEST(Cover, SinglePairIsHamiltonianPath) {
  Arrangement g(4, 2);
  auto paths = disjoint_path_cover(g, 2, {{1, 2}}, {{1, 3}});
  expect_cover(g, {{1, 2}}, {{1, 3}}, paths);
}

TEST(Cover, MatchedPairs) {
  Arrangement g(5, 2);
  std::vector<Vertex> A{{1, 2}, {2, 3}};
  std::vector<Vertex> B{{3, 2}, {4, 3}};
  auto paths = disjoint_path_cover(g, 2, A, B);
  expect_cover(g, A, B, paths);
  // The first pair stays inside class 2.
  EXPECT_EQ(paths[0].size(), 4u);
  for (const auto& x : paths[0]) EXPECT_EQ(x.at(2), 2);
}

TEST(Cover, UnmatchedPairs) {
  Arrangement g(5, 2);
  std::vector<Vertex> A{{1, 2}, {1, 3}};
  std::vector<Vertex> B{{2, 4}, {2, 5}};
  expect_cover(g, A, B, disjoint_path_cover(g, 2, A, B));
}

TEST(Cover, OnePointPair) {
  Arrangement g(5, 2);
  std::vector<Vertex> A{{1, 2}, {3, 4}};
  std::vector<Vertex> B{{5, 1}, {3, 4}};
  auto paths = disjoint_path_cover(g, 2, A, B);
  expect_cover(g, A, B, paths);
  EXPECT_EQ(paths[1], (Path{{3, 4}}));
}

TEST(Cover, SampledA52AndA53) {
  std::mt19937_64 rng(11);
  for (auto [n, k] : {std::pair{5, 2}, {5, 3}}) {
    Arrangement g(n, k);
    auto vs = g.vertices();
    int done = 0;
    while (done < 60) {
      const int m = 1 + static_cast<int>(rng() % 3);
      const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
      std::vector<Vertex> A;
      std::vector<Vertex> B;
      std::set<Vertex> used;
      std::set<Label> la;
      std::set<Label> lb;
      for (int tries = 0; tries < 200 && static_cast<int>(A.size()) < m; ++tries) {
        const Vertex& a = vs[rng() % vs.size()];
        const Vertex& b = vs[rng() % vs.size()];
        if (a == b || used.contains(a) || used.contains(b) || la.contains(a.at(t)) || lb.contains(b.at(t))) continue;
        A.push_back(a);
        B.push_back(b);
        used.insert(a);
        used.insert(b);
        la.insert(a.at(t));
        lb.insert(b.at(t));
      }
      if (static_cast<int>(A.size()) < m) continue;
      expect_cover(g, A, B, disjoint_path_cover(g, t, A, B));
      ++done;
    }
  }
}

TEST(Cover, RejectsBadSets) {
  Arrangement g(5, 2);
  EXPECT_THROW(disjoint_path_cover(g, 2, {{1, 2}}, {}), InputError);
  EXPECT_THROW(disjoint_path_cover(g, 2, {{1, 2}, {3, 2}}, {{2, 1}, {2, 3}}), InputError);
  EXPECT_THROW(disjoint_path_cover(g, 3, {{1, 2}}, {{2, 1}}), InputError);
}

TEST(Container, CompleteGraph) {
  Container c = build(5, 1, {1}, {2}, 4);
  EXPECT_EQ(c.paths, (std::vector<Path>{{{1}, {2}}, {{1}, {3}, {2}}, {{1}, {4}, {2}}, {{1}, {5}, {2}}}));
  build(5, 1, {4}, {2}, 1);
  build(5, 1, {4}, {2}, 2);
}

TEST(Container, ExcludedFamily) {
  Arrangement g(4, 3);
  EXPECT_THROW(container({g, {1, 2, 3}, {2, 1, 3}, 1}), UnsupportedFamily);
  EXPECT_THROW(container({Arrangement(6, 5), {1, 2, 3, 4, 5}, {2, 1, 3, 4, 5}, 3}), UnsupportedFamily);
}

TEST(Container, RejectsBadRequests) {
  Arrangement g(5, 2);
  EXPECT_THROW(container({g, {1, 2}, {1, 2}, 3}), InputError);
  EXPECT_THROW(container({g, {1, 2}, {1, 3}, 0}), InputError);
  EXPECT_THROW(container({g, {1, 2}, {1, 3}, 7}), InputError);
  EXPECT_THROW(container({g, {1, 1}, {1, 3}, 3}), InputError);
  EXPECT_THROW(container_general({g, {1, 2}, {1, 3}, 4}), InputError);
  EXPECT_THROW(container_high({g, {1, 2}, {1, 3}, 3}), InputError);
}

TEST(Container, SmallL) {
  build(5, 3, {1, 2, 3}, {3, 4, 5}, 1);
  build(5, 3, {1, 2, 3}, {3, 4, 5}, 2);
  build(6, 4, {1, 2, 3, 4}, {6, 5, 4, 3}, 2);
}

TEST(Container, GeneralExamples) {
  build(5, 2, {1, 2}, {2, 1}, 3);
  build(5, 3, {1, 2, 3}, {4, 2, 3}, 3);
  build(6, 2, {1, 2}, {1, 3}, 4);
  build(6, 3, {1, 2, 3}, {3, 1, 2}, 5);
  build(6, 3, {1, 2, 3}, {4, 5, 6}, 6);
  build(6, 4, {1, 2, 3, 4}, {2, 1, 4, 3}, 6);
}

TEST(Container, HighExamples) {
  Container c = build(5, 2, {1, 2}, {3, 4}, 4);
  EXPECT_EQ(c, a52_disjoint_tables()[0]);
  build(5, 3, {1, 2, 3}, {1, 2, 4}, 5);
  build(5, 3, {1, 2, 3}, {1, 2, 4}, 6);
  build(6, 2, {1, 2}, {3, 4}, 5);
  build(6, 2, {1, 2}, {3, 4}, 8);
  build(6, 4, {1, 2, 3, 4}, {5, 6, 1, 2}, 8);
}

// Disjoint label sets with k = 3: a cover pair there collapses to a
// single vertex.
TEST(Container, DisjointLabelsThreePositions) {
  for (int l = 7; l <= 9; ++l) build(6, 3, {2, 6, 3}, {4, 1, 5}, l);
  for (int l = 9; l <= 12; ++l) build(7, 3, {1, 2, 3}, {4, 5, 6}, l);
}

// Removed vertices in 120-vertex classes, where the first split choice
// has no fault-free chain.
TEST(Container, AvoidingPathsInLargeClasses) {
  build(7, 4, {2, 6, 7, 1}, {6, 1, 2, 7}, 9);
  build(7, 4, {4, 7, 3, 6}, {5, 4, 7, 1}, 9);
}

TEST(Container, EveryLOnA52Pair) {
  for (int l = 1; l <= 6; ++l) {
    build(5, 2, {1, 2}, {2, 1}, l);
    build(5, 2, {3, 5}, {1, 4}, l);
    build(5, 2, {3, 5}, {3, 4}, l);
    build(5, 2, {3, 5}, {5, 4}, l);
  }
}

TEST(Container, Deterministic) {
  Arrangement g(6, 3);
  ContainerRequest req{g, {1, 4, 2}, {5, 2, 6}, 5};
  EXPECT_EQ(container(req), container(req));
}

TEST(Container, ErrorsCarryCasePath) {
  ConstructionError outside("plain");
  EXPECT_EQ(outside.case_path(), "");
  CaseScope a("high");
  CaseScope b("disjoint");
  ConstructionError e("no free vertex");
  EXPECT_EQ(e.case_path(), "high/disjoint");
  EXPECT_EQ(e.detail(), "no free vertex");
  EXPECT_NE(std::string(e.what()).find("high/disjoint"), std::string::npos);
}
