#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace quadmaps {

// Connected map on an orientable surface, encoded as a rotation system on
// half-edges 0..2E-1. alpha is the fixed-point-free involution pairing the
// two halves of each edge; sigma gives the next half-edge counterclockwise
// around the tail vertex.
//
// Face convention (asserted in the tests): orbits of phi(h) = sigma(alpha(h))
// list, with tails in clockwise order, the half-edges having that face on
// their RIGHT.
class PlanarMap {
 public:
  PlanarMap(std::vector<int> alpha, std::vector<int> sigma);

  int half_edge_count() const { return static_cast<int>(alpha_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int vertex_count() const { return n_vertices_; }
  int face_count() const { return n_faces_; }
  int genus() const;

  int alpha(int h) const { return alpha_[static_cast<size_t>(h)]; }
  int sigma(int h) const { return sigma_[static_cast<size_t>(h)]; }
  int sigma_inv(int h) const { return sigma_inv_[static_cast<size_t>(h)]; }
  int next_in_face(int h) const { return sigma(alpha(h)); }

  int vertex_of(int h) const { return vertex_of_[static_cast<size_t>(h)]; }
  int head_of(int h) const { return vertex_of(alpha(h)); }
  int face_of(int h) const { return face_of_[static_cast<size_t>(h)]; }

  // boundary of the face right of h, starting at h; tails in clockwise order
  std::vector<int> face_orbit(int h) const;
  // half-edges out of v in counterclockwise order
  std::vector<int> vertex_orbit(int v) const;
  int degree(int v) const;
  int face_degree(int h) const;
  // a representative half-edge for each face, indexed by face id
  std::vector<int> face_representatives() const;

  const std::vector<int>& alpha_perm() const { return alpha_; }
  const std::vector<int>& sigma_perm() const { return sigma_; }

 private:
  std::vector<int> alpha_, sigma_, sigma_inv_;
  std::vector<int> vertex_of_, face_of_;
  int n_vertices_ = 0, n_faces_ = 0;
};

std::vector<int> bfs_distances(const PlanarMap& m, int source_vertex);

// BFS-canonical encoding of the map rooted at a half-edge. Two rooted maps
// produce equal codes iff they are isomorphic as rooted maps; the optional
// per-vertex annotation (labels, source marks, ...) must then match too.
std::vector<int64_t> canonical_code(const PlanarMap& m, int root,
                                    const std::vector<int>* vertex_annotation = nullptr);

// all faces of degree 4, genus 0 (bipartiteness follows and is re-checked)
bool is_quadrangulation(const PlanarMap& m);
bool is_bipartite(const PlanarMap& m);

// Result of pruning all hanging trees. skel_to_orig maps skeleton half-edge
// ids to ids in the original map; the record retains the pruned material so
// reconstruct() can rebuild the original map exactly.
struct SkeletonDecomposition {
  PlanarMap skeleton;
  std::vector<int> skel_to_orig;
  std::vector<int> orig_to_skel;  // -1 for pruned half-edges
  // attachment record: the original rotation system, from which the pruned
  // trees and their insertion points can be read back
  std::vector<int> orig_alpha;
  std::vector<int> orig_sigma;

  PlanarMap reconstruct() const;
};

// Requires a map with at least one cycle (otherwise there is no skeleton).
SkeletonDecomposition skeleton(const PlanarMap& m);

// The seven homotopy types of a three-face skeleton after smoothing its
// degree-two vertices. Letters b,c,d (resp. e,f,g) are assigned by which
// pair of distinguished faces shares only a vertex (resp. nothing):
//   a: theta graph (all three face pairs share an edge)
//   b/c/d: two loops on one 4-valent vertex; vertex-only pair {1,2}/{2,3}/{3,1}
//   e/f/g: dumbbell; disjoint pair {1,2}/{2,3}/{3,1}
enum class BackboneType { a, b, c, d, e, f, g };

// face_reps: one half-edge inside each of the three distinguished faces of m.
BackboneType backbone(const PlanarMap& m, const std::array<int, 3>& face_reps);

std::string to_string(BackboneType t);

// JSON round trip: {"alpha": [...], "sigma": [...]}
std::string planar_map_to_json(const PlanarMap& m);
PlanarMap planar_map_from_json(const std::string& text);

}  // namespace quadmaps
