#include "quadmaps/labeled_map.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>

namespace quadmaps {

bool LabeledMap::well_labeled() const {
  if (static_cast<int>(labels.size()) != map.vertex_count()) return false;
  for (int h = 0; h < map.half_edge_count(); ++h) {
    int d = labels[static_cast<size_t>(map.vertex_of(h))] -
            labels[static_cast<size_t>(map.head_of(h))];
    if (d < -1 || d > 1) return false;
  }
  return true;
}

int LabeledMap::face_min_label(int rep) const {
  int best = std::numeric_limits<int>::max();
  for (int h : map.face_orbit(rep)) best = std::min(best, labels[static_cast<size_t>(map.vertex_of(h))]);
  return best;
}

int LabeledMap::boundary_min_label(int rep_a, int rep_b, bool& exists) const {
  std::vector<char> on_a(static_cast<size_t>(map.vertex_count()), 0);
  for (int h : map.face_orbit(rep_a)) on_a[static_cast<size_t>(map.vertex_of(h))] = 1;
  exists = false;
  int best = std::numeric_limits<int>::max();
  for (int h : map.face_orbit(rep_b)) {
    int v = map.vertex_of(h);
    if (on_a[static_cast<size_t>(v)]) {
      exists = true;
      best = std::min(best, labels[static_cast<size_t>(v)]);
    }
  }
  return exists ? best : -1;
}

std::string labeled_map_to_json(const LabeledMap& m) {
  nlohmann::json j;
  j["alpha"] = m.map.alpha_perm();
  j["sigma"] = m.map.sigma_perm();
  j["labels"] = m.labels;
  j["face_reps"] = m.face_reps;
  return j.dump();
}

LabeledMap labeled_map_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LabeledMap m{PlanarMap(j.at("alpha").get<std::vector<int>>(),
                         j.at("sigma").get<std::vector<int>>()),
               j.at("labels").get<std::vector<int>>(),
               j.at("face_reps").get<std::vector<int>>()};
  if (!m.well_labeled()) throw std::invalid_argument("labeled_map_from_json: labels jump by more than 1");
  return m;
}

}  // namespace quadmaps
