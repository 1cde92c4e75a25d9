#include <quadmaps/planar_map.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

using namespace quadmaps;

namespace {

// Square: vertices 0..3 in a cycle, half-edges 2e, 2e+1 per edge e.
PlanarMap square() {
  // edges: 0-1, 1-2, 2-3, 3-0
  std::vector<int> alpha = {1, 0, 3, 2, 5, 4, 7, 6};
  // sigma at vertex v lists outgoing half-edges in counterclockwise order
  std::vector<int> sigma(8);
  auto set_vertex = [&](std::vector<int> hs) {
    for (size_t k = 0; k < hs.size(); ++k) sigma[hs[k]] = hs[(k + 1) % hs.size()];
  };
  set_vertex({0, 7});  // vertex 0: to 1, to 3
  set_vertex({2, 1});  // vertex 1: to 2, to 0
  set_vertex({4, 3});  // vertex 2
  set_vertex({6, 5});  // vertex 3
  return PlanarMap(alpha, sigma);
}

// Relabel half-edges by a random permutation; the map is unchanged.
PlanarMap relabel(const PlanarMap& m, std::mt19937_64& rng) {
  int h = static_cast<int>(m.alpha_perm().size());
  std::vector<int> perm(h);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> alpha(h), sigma(h);
  for (int i = 0; i < h; ++i) {
    alpha[perm[i]] = perm[m.alpha(i)];
    sigma[perm[i]] = perm[m.sigma(i)];
  }
  return PlanarMap(alpha, sigma);
}

}  // namespace

TEST_CASE("square map: counts, genus, orbits") {
  PlanarMap m = square();
  CHECK(m.genus() == 0);
  CHECK(m.face_representatives().size() == 2);
  CHECK(m.face_degree(0) == 4);
  CHECK(m.degree(0) == 2);
  CHECK(is_quadrangulation(m));
  CHECK(is_bipartite(m));
  auto d = bfs_distances(m, 0);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == 2);
  CHECK(d[3] == 1);
}

TEST_CASE("canonical code is a relabeling invariant") {
  PlanarMap m = square();
  std::mt19937_64 rng(7);
  auto base = canonical_code(m, 0);
  for (int trial = 0; trial < 20; ++trial) {
    PlanarMap r = relabel(m, rng);
    // the root half-edge moves under relabeling; compare min over roots
    std::vector<int64_t> best, cand;
    for (int h = 0; h < 8; ++h) {
      cand = canonical_code(r, h);
      if (best.empty() || cand < best) best = cand;
    }
    std::vector<int64_t> orig_best;
    for (int h = 0; h < 8; ++h) {
      cand = canonical_code(m, h);
      if (orig_best.empty() || cand < orig_best) orig_best = cand;
    }
    CHECK(best == orig_best);
  }
}

TEST_CASE("annotations split otherwise isomorphic rootings") {
  PlanarMap m = square();
  std::vector<int> mark(4, 0);
  mark[2] = 1;  // distinguish the far corner
  auto a = canonical_code(m, 0, &mark);
  auto b = canonical_code(m, 0);
  CHECK(a != b);
}

TEST_CASE("json round trip") {
  PlanarMap m = square();
  std::string text = planar_map_to_json(m);
  PlanarMap back = planar_map_from_json(text);
  CHECK(back.alpha_perm() == m.alpha_perm());
  CHECK(back.sigma_perm() == m.sigma_perm());
}

TEST_CASE("skeleton prunes trees and reconstructs the original") {
  // square with a pendant edge hanging off vertex 0
  std::vector<int> alpha = {1, 0, 3, 2, 5, 4, 7, 6, 9, 8};
  std::vector<int> sigma(10);
  auto set_vertex = [&](std::vector<int> hs) {
    for (size_t k = 0; k < hs.size(); ++k) sigma[hs[k]] = hs[(k + 1) % hs.size()];
  };
  set_vertex({0, 8, 7});
  set_vertex({2, 1});
  set_vertex({4, 3});
  set_vertex({6, 5});
  set_vertex({9});
  PlanarMap m(alpha, sigma);
  CHECK(m.face_representatives().size() == 2);
  SkeletonDecomposition dec = skeleton(m);
  CHECK(dec.skeleton.alpha_perm().size() == 8);  // pendant edge gone
  CHECK(dec.skeleton.genus() == 0);
  PlanarMap back = dec.reconstruct();
  CHECK(back.alpha_perm() == m.alpha_perm());
  CHECK(back.sigma_perm() == m.sigma_perm());
}

TEST_CASE("skeleton of a tree is rejected") {
  // single edge
  PlanarMap m({1, 0}, {0, 1});
  CHECK(m.genus() == 0);
  CHECK_THROWS((void)skeleton(m));
}
