#pragma once

#include <stdexcept>
#include <vector>

#include "quadmaps/gf_discrete.hpp"
#include "quadmaps/labeled_map.hpp"
#include "quadmaps/planar_map.hpp"

namespace quadmaps {

// Quadrangulation with p marked source vertices and integer delays tau_i.
// Admissible delays satisfy |tau_i - tau_j| < d(v_i,v_j) and
// tau_i - tau_j = d(v_i,v_j) mod 2 for every pair.
struct PointedQuadrangulation {
  PlanarMap map;
  std::vector<int> sources;
  std::vector<int> delays;
};

struct AlignedTripleError : std::domain_error {
  using std::domain_error::domain_error;
};

// l(v) = min_i (tau_i + d_i(v)). Checks admissibility of the delays and that
// the minimum at each source is attained by that source only.
std::vector<int> label_vertices(const PlanarMap& q, const std::vector<int>& sources,
                                const std::vector<int>& delays);

struct ForwardResult {
  LabeledMap labeled;  // face_reps ordered like the sources
  // quadrangulation vertex -> labeled-map vertex; -1 for the sources
  std::vector<int> vertex_image;
};

// Quadrangulation with delays -> labeled map with p faces (the sources become
// isolated and are dropped; face i of the result encloses source i).
// Face rule, stated on clockwise boundaries: a simple face (labels
// l,l+1,l+2,l+1) keeps a parallel copy of its l+2 -> l+1 clockwise edge; a
// confluent face (l,l+1,l,l+1) gains a chord between its two l+1 corners.
ForwardResult forward_bijection(const PointedQuadrangulation& pq);

struct InverseResult {
  PointedQuadrangulation pointed;
  // labeled-map vertex -> quadrangulation vertex (sources are appended after)
  std::vector<int> vertex_image;
};

// Labeled map with p faces -> quadrangulation with p sources, taking
// tau_i = (min label on face i) - 1. Each corner is joined by an arch to the
// first corner of label one less encountered counterclockwise inside its
// face; corners of minimal label join a new source vertex instead.
InverseResult inverse_bijection(const LabeledMap& m);

// Delays (-s,-t,-u) of a non-aligned triple. Throws AlignedTripleError when
// one of s,t,u vanishes: aligned triples go through the two-source map with
// delays (-d31, -d23) and a marked vertex instead.
std::vector<int> delays_for_triple(const DistanceTriple& d);

struct TripleConstraintReport {
  bool face_minima_ok = false;    // minima 1-s, 1-t, 1-u on faces 1,2,3
  bool boundary_minima_ok = false;  // min label 0 on all three pairwise boundaries
  BackboneType backbone_type = BackboneType::a;
  bool ok() const { return face_minima_ok && boundary_minima_ok; }
};

// Constraints satisfied by forward images of triply-pointed quadrangulations
// with delays (-s,-t,-u).
TripleConstraintReport verify_triple_constraints(const LabeledMap& m, int s, int t, int u);

struct AlignedConstraintReport {
  bool face_minima_ok = false;   // minima 1-s, 1-t
  bool boundary_min_ok = false;  // min label 0 on the boundary between the faces
  bool marked_on_boundary_ok = false;  // marked vertex has label 0, incident to both faces
  bool ok() const { return face_minima_ok && boundary_min_ok && marked_on_boundary_ok; }
};

// Two-source variant for an aligned triple: s = d31, t = d23, and
// marked_vertex is the image of the vertex sitting on the geodesic.
AlignedConstraintReport verify_aligned_constraints(const LabeledMap& m, int s, int t,
                                                   int marked_vertex);

}  // namespace quadmaps
