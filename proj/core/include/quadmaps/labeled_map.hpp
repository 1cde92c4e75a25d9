#pragma once

#include <string>
#include <vector>

#include "quadmaps/planar_map.hpp"

namespace quadmaps {

// Map with integer vertex labels and an ordered list of distinguished faces,
// each given by a representative half-edge. Labels of adjacent vertices
// differ by at most one.
struct LabeledMap {
  PlanarMap map;
  std::vector<int> labels;     // one per vertex
  std::vector<int> face_reps;  // one half-edge per distinguished face

  bool well_labeled() const;
  // smallest label among vertices incident to the face of rep
  int face_min_label(int rep) const;
  // smallest label among vertices incident to both faces; -1 components never
  // touch (returned through `exists`)
  int boundary_min_label(int rep_a, int rep_b, bool& exists) const;
};

std::string labeled_map_to_json(const LabeledMap& m);
LabeledMap labeled_map_from_json(const std::string& text);

}  // namespace quadmaps
