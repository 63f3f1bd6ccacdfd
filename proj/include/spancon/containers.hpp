#pragma once

#include <vector>

#include "spancon/automorphism.hpp"
#include "spancon/container.hpp"

namespace spancon {

// An l*-container between u and v. The result is validated before it is
// returned. Throws InputError for malformed requests, UnsupportedFamily
// for A(n,n-1) with n >= 3, and ConstructionError when a step fails.
Container container(const ContainerRequest& req);

// 3 <= l <= (n-k)(k-1), n >= 5.
Container container_general(const ContainerRequest& req);
// (n-k)(k-1) < l <= k(n-k), n >= 5 (k = 1 and A(4,2) are delegated).
Container container_high(const ContainerRequest& req);

// Stored containers of A(4,2) for l in {3,4}, moved onto (u,v) by an
// automorphism fixing the stored pair type.
Container base_table_a42(const Vertex& u, const Vertex& v, int l);
// The stored containers themselves: u = 12, v one of 13, 34, 23, 21.
const std::vector<Container>& a42_tables();
// Stored containers of A(5,2) from 12 to 34 for l in {4,5,6}.
const std::vector<Container>& a52_disjoint_tables();

// m disjoint paths covering A(n,k), path j running from A[j] to B[j].
// The t-th labels are distinct within A and within B.
std::vector<Path> disjoint_path_cover(const Arrangement& g, int t, const std::vector<Vertex>& A,
                                      const std::vector<Vertex>& B);

}  // namespace spancon
