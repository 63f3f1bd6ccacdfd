#include <gtest/gtest.h>

#include "spancon/automorphism.hpp"
#include "spancon/containers.hpp"
#include "spancon/error.hpp"
#include "spancon/verify.hpp"

using namespace spancon;

namespace {

Path P(std::initializer_list<int> xs) {
  Path p;
  for (int x : xs) p.push_back(parse_vertex(std::to_string(x), 4));
  return p;
}

// The stored 3-path container from 12 to 13.
Container three() {
  return {4, 2, {1, 2}, {1, 3}, 3,
          {P({12, 13}), P({12, 14, 13}), P({12, 42, 43, 41, 21, 31, 32, 34, 24, 23, 13})}};
}

const Arrangement kA42(4, 2);

}  // namespace

TEST(Validate, AcceptsStoredContainer) { EXPECT_TRUE(validate_container(kA42, three()).ok()); }

TEST(Validate, Truncated) {
  Container c = three();
  c.paths[2] = P({12, 42, 43, 41, 21, 31, 32, 34, 24, 23});
  auto r = validate_container(kA42, c);
  EXPECT_TRUE(r.has(ValidationCode::kNotSpanning));
  EXPECT_TRUE(r.has(ValidationCode::kBadEndpoints));
}

TEST(Validate, DroppedVertex) {
  Container c = three();
  c.paths[2] = P({12, 42, 43, 41, 21, 31, 32, 34, 24, 14, 13});
  auto r = validate_container(kA42, c);
  EXPECT_TRUE(r.has(ValidationCode::kNotSpanning));
  EXPECT_TRUE(r.has(ValidationCode::kNotDisjoint));
  EXPECT_FALSE(r.has(ValidationCode::kNotPath));
}

TEST(Validate, SharedInternalVertex) {
  Container c = three();
  c.paths[1] = P({12, 14, 24, 23, 13});
  EXPECT_TRUE(validate_container(kA42, c, false).has(ValidationCode::kNotDisjoint));
}

TEST(Validate, NotAdjacent) {
  Container c = three();
  c.paths[1] = P({12, 34, 13});
  EXPECT_TRUE(validate_container(kA42, c, false).has(ValidationCode::kNotPath));
}

TEST(Validate, RepeatedVertex) {
  Container c = three();
  c.paths[1] = P({12, 14, 24, 14, 13});
  EXPECT_TRUE(validate_container(kA42, c, false).has(ValidationCode::kDuplicateVertex));
}

TEST(Validate, WrongEndpoints) {
  Container c = three();
  c.paths[0] = P({13, 12});
  EXPECT_TRUE(validate_container(kA42, c).has(ValidationCode::kBadEndpoints));
  c = three();
  c.v = {1, 2};
  EXPECT_TRUE(validate_container(kA42, c).has(ValidationCode::kBadEndpoints));
}

TEST(Validate, InvalidVertex) {
  Container c = three();
  c.paths[1] = P({12, 11, 13});
  EXPECT_TRUE(validate_container(kA42, c).has(ValidationCode::kNotPath));
}

TEST(Validate, CountMismatch) {
  Container c = three();
  c.l = 4;
  EXPECT_TRUE(validate_container(kA42, c).has(ValidationCode::kNotPath));
}

TEST(Validate, WithinView) {
  Arrangement g(5, 2);
  SubgraphView w = SubgraphView(g).pinned(2, {1});
  Container c{5, 2, {2, 1}, {3, 1}, 1, {{{2, 1}, {4, 1}, {5, 1}, {3, 1}}}};
  EXPECT_TRUE(validate_container(w, c).ok());
  c.paths[0] = {{2, 1}, {4, 1}, {3, 1}};
  EXPECT_TRUE(validate_container(w, c).has(ValidationCode::kNotSpanning));
  EXPECT_TRUE(validate_container(w, c, false).ok());
}

TEST(Oracle, ContainerExamples) {
  EXPECT_TRUE(oracle_container_exists(kA42, {1, 2}, {1, 3}, 4));
  EXPECT_FALSE(oracle_container_exists(kA42, {1, 2}, {1, 3}, 5));
  EXPECT_FALSE(oracle_container_exists(Arrangement(4, 3), {1, 2, 3}, {2, 3, 1}, 1));
  EXPECT_TRUE(oracle_container_exists(Arrangement(4, 3), {1, 2, 3}, {2, 1, 3}, 1));
  EXPECT_THROW(oracle_container_exists(Arrangement(5, 3), {1, 2, 3}, {1, 2, 4}, 2), InputError);
}

TEST(Oracle, HamPathExamples) {
  SubgraphView w(kA42);
  EXPECT_TRUE(oracle_ham_path(w, {1, 2}, {1, 3}));
  EXPECT_FALSE(oracle_ham_path(SubgraphView(Arrangement(4, 3)), {1, 2, 3}, {2, 3, 1}));
  EXPECT_THROW(oracle_ham_path(w.pinned(2, {1}), {2, 1}, {2, 1}), InputError);
  EXPECT_THROW(oracle_ham_path(SubgraphView(Arrangement(6, 3)), {1, 2, 3}, {1, 2, 4}), InputError);
}

TEST(Oracle, HamPathInView) {
  Arrangement g(5, 2);
  SubgraphView w = SubgraphView(g).pinned(2, {1, 2}).without_vertices({{3, 1}});
  EXPECT_TRUE(oracle_ham_path(w, {1, 2}, {2, 1}));
  // A path vertex with a single neighbor in the view must be an end.
  SubgraphView star = SubgraphView(g).pinned(2, {1}).without_edges({{{2, 1}, {3, 1}}, {{2, 1}, {4, 1}}});
  EXPECT_FALSE(oracle_ham_path(star, {3, 1}, {4, 1}));
  EXPECT_TRUE(oracle_ham_path(star, {2, 1}, {4, 1}));
}

TEST(Oracle, InvariantUnderLabelPermutation) {
  Automorphism a = Automorphism::of_labels(2, {3, 1, 4, 2});
  for (const auto& [u, v] : std::vector<std::pair<Vertex, Vertex>>{{{1, 2}, {3, 4}}, {{1, 2}, {2, 1}}, {{2, 3}, {4, 3}}}) {
    for (int l = 1; l <= 4; ++l) {
      EXPECT_EQ(oracle_container_exists(kA42, u, v, l), oracle_container_exists(kA42, a.apply(u), a.apply(v), l));
    }
  }
}

TEST(Oracle, BipartiteCounting) {
  // A(4,3) has two parts of 12. Paths between endpoints of the same part
  // have one more inner vertex of the other part than of their own, so
  // only l = 2 balances the counts.
  Arrangement g(4, 3);
  EXPECT_FALSE(oracle_container_exists(g, {1, 2, 3}, {2, 3, 1}, 1));
  EXPECT_TRUE(oracle_container_exists(g, {1, 2, 3}, {2, 3, 1}, 2));
  EXPECT_FALSE(oracle_container_exists(g, {1, 2, 3}, {2, 3, 1}, 3));
}
