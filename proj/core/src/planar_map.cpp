#include "quadmaps/planar_map.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace quadmaps {

namespace {

void check_permutation(const std::vector<int>& p, const char* what) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument(std::string(what) + ": not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
}

// labels orbits of a permutation; returns orbit count
int label_orbits(const std::vector<int>& perm, std::vector<int>& orbit_of) {
  orbit_of.assign(perm.size(), -1);
  int n_orbits = 0;
  for (size_t h = 0; h < perm.size(); ++h) {
    if (orbit_of[h] != -1) continue;
    int cur = static_cast<int>(h);
    while (orbit_of[static_cast<size_t>(cur)] == -1) {
      orbit_of[static_cast<size_t>(cur)] = n_orbits;
      cur = perm[static_cast<size_t>(cur)];
    }
    ++n_orbits;
  }
  return n_orbits;
}

}  // namespace

PlanarMap::PlanarMap(std::vector<int> alpha, std::vector<int> sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  if (alpha_.size() != sigma_.size() || alpha_.empty() || alpha_.size() % 2 != 0)
    throw std::invalid_argument("PlanarMap: bad half-edge count");
  check_permutation(alpha_, "alpha");
  check_permutation(sigma_, "sigma");
  for (size_t h = 0; h < alpha_.size(); ++h) {
    if (alpha_[static_cast<size_t>(alpha_[h])] != static_cast<int>(h) ||
        alpha_[h] == static_cast<int>(h))
      throw std::invalid_argument("PlanarMap: alpha is not a fixed-point-free involution");
  }
  sigma_inv_.assign(sigma_.size(), 0);
  for (size_t h = 0; h < sigma_.size(); ++h) sigma_inv_[static_cast<size_t>(sigma_[h])] = static_cast<int>(h);

  n_vertices_ = label_orbits(sigma_, vertex_of_);
  std::vector<int> phi(sigma_.size());
  for (size_t h = 0; h < sigma_.size(); ++h) phi[h] = sigma_[static_cast<size_t>(alpha_[h])];
  n_faces_ = label_orbits(phi, face_of_);

  // connectivity over the group generated by alpha and sigma
  std::vector<char> seen(alpha_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 0;
  while (!q.empty()) {
    int h = q.front();
    q.pop();
    ++reached;
    for (int nh : {alpha_[static_cast<size_t>(h)], sigma_[static_cast<size_t>(h)]}) {
      if (!seen[static_cast<size_t>(nh)]) {
        seen[static_cast<size_t>(nh)] = 1;
        q.push(nh);
      }
    }
  }
  if (reached != half_edge_count()) throw std::invalid_argument("PlanarMap: not connected");
}

int PlanarMap::genus() const {
  int chi = vertex_count() - edge_count() + face_count();
  return (2 - chi) / 2;
}

std::vector<int> PlanarMap::face_orbit(int h) const {
  std::vector<int> out;
  int cur = h;
  do {
    out.push_back(cur);
    cur = next_in_face(cur);
  } while (cur != h);
  return out;
}

std::vector<int> PlanarMap::vertex_orbit(int v) const {
  // first incident half-edge by id, then follow sigma
  int start = -1;
  for (int h = 0; h < half_edge_count(); ++h)
    if (vertex_of(h) == v) {
      start = h;
      break;
    }
  if (start < 0) throw std::invalid_argument("vertex_orbit: no such vertex");
  std::vector<int> out;
  int cur = start;
  do {
    out.push_back(cur);
    cur = sigma(cur);
  } while (cur != start);
  return out;
}

int PlanarMap::degree(int v) const { return static_cast<int>(vertex_orbit(v).size()); }

int PlanarMap::face_degree(int h) const { return static_cast<int>(face_orbit(h).size()); }

std::vector<int> PlanarMap::face_representatives() const {
  std::vector<int> rep(static_cast<size_t>(face_count()), -1);
  for (int h = 0; h < half_edge_count(); ++h)
    if (rep[static_cast<size_t>(face_of(h))] == -1) rep[static_cast<size_t>(face_of(h))] = h;
  return rep;
}

std::vector<int> bfs_distances(const PlanarMap& m, int source_vertex) {
  std::vector<int> dist(static_cast<size_t>(m.vertex_count()), -1);
  std::vector<int> first(static_cast<size_t>(m.vertex_count()), -1);
  for (int h = 0; h < m.half_edge_count(); ++h)
    if (first[static_cast<size_t>(m.vertex_of(h))] == -1)
      first[static_cast<size_t>(m.vertex_of(h))] = h;
  std::queue<int> q;
  dist[static_cast<size_t>(source_vertex)] = 0;
  q.push(source_vertex);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    int start = first[static_cast<size_t>(v)];
    int h = start;
    do {
      int w = m.head_of(h);
      if (dist[static_cast<size_t>(w)] == -1) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push(w);
      }
      h = m.sigma(h);
    } while (h != start);
  }
  return dist;
}

std::vector<int64_t> canonical_code(const PlanarMap& m, int root,
                                    const std::vector<int>* vertex_annotation) {
  int n = m.half_edge_count();
  std::vector<int> num(static_cast<size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  num[static_cast<size_t>(root)] = 0;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    int h = order[i];
    for (int nh : {m.sigma(h), m.alpha(h)}) {
      if (num[static_cast<size_t>(nh)] == -1) {
        num[static_cast<size_t>(nh)] = static_cast<int>(order.size());
        order.push_back(nh);
      }
    }
  }
  std::vector<int64_t> code;
  code.reserve(static_cast<size_t>(n) * 3);
  for (int h : order) {
    code.push_back(num[static_cast<size_t>(m.sigma(h))]);
    code.push_back(num[static_cast<size_t>(m.alpha(h))]);
  }
  if (vertex_annotation) {
    for (int h : order) code.push_back((*vertex_annotation)[static_cast<size_t>(m.vertex_of(h))]);
  }
  return code;
}

bool is_bipartite(const PlanarMap& m) {
  std::vector<int> d = bfs_distances(m, 0);
  for (int h = 0; h < m.half_edge_count(); ++h) {
    int a = d[static_cast<size_t>(m.vertex_of(h))];
    int b = d[static_cast<size_t>(m.head_of(h))];
    if ((a + b) % 2 == 0) return false;
  }
  return true;
}

bool is_quadrangulation(const PlanarMap& m) {
  if (m.genus() != 0) return false;
  std::vector<int> reps = m.face_representatives();
  for (int h : reps)
    if (m.face_degree(h) != 4) return false;
  return is_bipartite(m);
}

SkeletonDecomposition skeleton(const PlanarMap& m) {
  int n = m.half_edge_count();
  std::vector<char> kept(static_cast<size_t>(n), 1);
  std::vector<int> deg(static_cast<size_t>(m.vertex_count()), 0);
  for (int h = 0; h < n; ++h) ++deg[static_cast<size_t>(m.vertex_of(h))];
  std::queue<int> leaves;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (deg[static_cast<size_t>(v)] == 1) leaves.push(v);
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (deg[static_cast<size_t>(v)] != 1) continue;
    int h = -1;
    for (int cand = 0; cand < n; ++cand)  // small maps; fine
      if (kept[static_cast<size_t>(cand)] && m.vertex_of(cand) == v) {
        h = cand;
        break;
      }
    int h2 = m.alpha(h);
    kept[static_cast<size_t>(h)] = kept[static_cast<size_t>(h2)] = 0;
    deg[static_cast<size_t>(v)] = 0;
    int w = m.vertex_of(h2);
    if (--deg[static_cast<size_t>(w)] == 1) leaves.push(w);
  }
  int n_kept = static_cast<int>(std::count(kept.begin(), kept.end(), 1));
  if (n_kept == 0) throw std::domain_error("skeleton: map is a tree");

  std::vector<int> orig_to_skel(static_cast<size_t>(n), -1);
  std::vector<int> skel_to_orig;
  skel_to_orig.reserve(static_cast<size_t>(n_kept));
  for (int h = 0; h < n; ++h)
    if (kept[static_cast<size_t>(h)]) {
      orig_to_skel[static_cast<size_t>(h)] = static_cast<int>(skel_to_orig.size());
      skel_to_orig.push_back(h);
    }
  std::vector<int> a(static_cast<size_t>(n_kept)), s(static_cast<size_t>(n_kept));
  for (int k = 0; k < n_kept; ++k) {
    int h = skel_to_orig[static_cast<size_t>(k)];
    a[static_cast<size_t>(k)] = orig_to_skel[static_cast<size_t>(m.alpha(h))];
    int cur = m.sigma(h);
    while (!kept[static_cast<size_t>(cur)]) cur = m.sigma(cur);
    s[static_cast<size_t>(k)] = orig_to_skel[static_cast<size_t>(cur)];
  }
  return SkeletonDecomposition{PlanarMap(std::move(a), std::move(s)), std::move(skel_to_orig),
                               std::move(orig_to_skel), m.alpha_perm(), m.sigma_perm()};
}

PlanarMap SkeletonDecomposition::reconstruct() const { return PlanarMap(orig_alpha, orig_sigma); }

BackboneType backbone(const PlanarMap& m, const std::array<int, 3>& face_reps) {
  SkeletonDecomposition sd = skeleton(m);
  const PlanarMap& sk = sd.skeleton;

  // carry each distinguished face into the skeleton: advance along the
  // original face orbit until a kept half-edge shows up
  std::array<int, 3> sk_rep{};
  for (int i = 0; i < 3; ++i) {
    int h = face_reps[i];
    while (sd.orig_to_skel[static_cast<size_t>(h)] == -1)
      h = sd.orig_sigma[static_cast<size_t>(sd.orig_alpha[static_cast<size_t>(h)])];
    sk_rep[static_cast<size_t>(i)] = sd.orig_to_skel[static_cast<size_t>(h)];
  }

  // smooth the degree-2 vertices in place on mutable alpha
  int n = sk.half_edge_count();
  std::vector<int> alpha = sk.alpha_perm();
  std::vector<char> alive(static_cast<size_t>(n), 1);
  std::vector<std::vector<int>> around(static_cast<size_t>(sk.vertex_count()));
  for (int h = 0; h < n; ++h) around[static_cast<size_t>(sk.vertex_of(h))].push_back(h);
  std::queue<int> deg2;
  for (int v = 0; v < sk.vertex_count(); ++v)
    if (around[static_cast<size_t>(v)].size() == 2) deg2.push(v);
  std::vector<int> live_deg(static_cast<size_t>(sk.vertex_count()));
  for (int v = 0; v < sk.vertex_count(); ++v)
    live_deg[static_cast<size_t>(v)] = static_cast<int>(around[static_cast<size_t>(v)].size());
  while (!deg2.empty()) {
    int v = deg2.front();
    deg2.pop();
    if (live_deg[static_cast<size_t>(v)] != 2) continue;
    int a = -1, b = -1;
    for (int h : around[static_cast<size_t>(v)])
      if (alive[static_cast<size_t>(h)]) (a == -1 ? a : b) = h;
    if (alpha[static_cast<size_t>(a)] == b)
      throw std::domain_error("backbone: isolated cycle during smoothing");
    int pa = alpha[static_cast<size_t>(a)], pb = alpha[static_cast<size_t>(b)];
    alpha[static_cast<size_t>(pa)] = pb;
    alpha[static_cast<size_t>(pb)] = pa;
    alive[static_cast<size_t>(a)] = alive[static_cast<size_t>(b)] = 0;
    live_deg[static_cast<size_t>(v)] = 0;
  }

  // rebuild a dense map from the surviving half-edges
  std::vector<int> to_new(static_cast<size_t>(n), -1), to_old;
  for (int h = 0; h < n; ++h)
    if (alive[static_cast<size_t>(h)]) {
      to_new[static_cast<size_t>(h)] = static_cast<int>(to_old.size());
      to_old.push_back(h);
    }
  int nn = static_cast<int>(to_old.size());
  if (nn == 0) throw std::domain_error("backbone: nothing left after smoothing");
  std::vector<int> na(static_cast<size_t>(nn)), ns(static_cast<size_t>(nn));
  for (int k = 0; k < nn; ++k) {
    int h = to_old[static_cast<size_t>(k)];
    na[static_cast<size_t>(k)] = to_new[static_cast<size_t>(alpha[static_cast<size_t>(h)])];
    int cur = sk.sigma(h);
    while (!alive[static_cast<size_t>(cur)]) cur = sk.sigma(cur);
    ns[static_cast<size_t>(k)] = to_new[static_cast<size_t>(cur)];
  }
  PlanarMap bb(std::move(na), std::move(ns));
  if (bb.face_count() != 3) throw std::domain_error("backbone: expected three faces");

  // distinguished face ids in the smoothed map
  std::array<int, 3> fid{};
  for (int i = 0; i < 3; ++i) {
    int h = sk_rep[static_cast<size_t>(i)];
    while (!alive[static_cast<size_t>(h)]) h = sk.sigma(sk.alpha(h));
    // note: after alpha surgery the smoothed face orbit must be taken in bb
    fid[static_cast<size_t>(i)] = bb.face_of(to_new[static_cast<size_t>(h)]);
  }

  // which distinguished pairs share an edge
  bool shares[3][3] = {};
  for (int h = 0; h < bb.half_edge_count(); ++h) {
    int f1 = bb.face_of(h), f2 = bb.face_of(bb.alpha(h));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (fid[static_cast<size_t>(i)] == f1 && fid[static_cast<size_t>(j)] == f2)
          shares[i][j] = shares[j][i] = true;
  }
  int pair = -1, n_missing = 0;  // 0: {1,2}, 1: {2,3}, 2: {3,1}
  if (!shares[0][1]) pair = 0, ++n_missing;
  if (!shares[1][2]) pair = 1, ++n_missing;
  if (!shares[2][0]) pair = 2, ++n_missing;
  if (n_missing == 0) {
    if (bb.vertex_count() != 2 || bb.edge_count() != 3)
      throw std::domain_error("backbone: unexpected theta shape");
    return BackboneType::a;
  }
  if (n_missing != 1) throw std::domain_error("backbone: unrecognized three-face shape");
  if (bb.vertex_count() == 1)
    return pair == 0 ? BackboneType::b : (pair == 1 ? BackboneType::c : BackboneType::d);
  if (bb.vertex_count() == 2)
    return pair == 0 ? BackboneType::e : (pair == 1 ? BackboneType::f : BackboneType::g);
  throw std::domain_error("backbone: unrecognized three-face shape");
}

std::string to_string(BackboneType t) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g"};
  return names[static_cast<int>(t)];
}

std::string planar_map_to_json(const PlanarMap& m) {
  nlohmann::json j;
  j["alpha"] = m.alpha_perm();
  j["sigma"] = m.sigma_perm();
  return j.dump();
}

PlanarMap planar_map_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return PlanarMap(j.at("alpha").get<std::vector<int>>(), j.at("sigma").get<std::vector<int>>());
}

}  // namespace quadmaps
