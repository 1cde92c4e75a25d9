#include "quadmaps/bijection.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace quadmaps {

namespace {

// A corner is identified with the half-edge it precedes in the rotation:
// corner(h) is the angular sector at tail(h) lying clockwise of h, which is
// the corner of the face on the right of h (the face of the phi-orbit of h).

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<int> label_vertices(const PlanarMap& q, const std::vector<int>& sources,
                                const std::vector<int>& delays) {
  size_t p = sources.size();
  if (p == 0 || delays.size() != p)
    throw std::invalid_argument("label_vertices: sources/delays size mismatch");
  std::vector<std::vector<int>> dist;
  dist.reserve(p);
  for (int s : sources) {
    if (s < 0 || s >= q.vertex_count()) throw std::invalid_argument("label_vertices: bad source");
    dist.push_back(bfs_distances(q, s));
  }
  for (size_t i = 0; i < p; ++i)
    for (size_t j = i + 1; j < p; ++j) {
      int d = dist[i][static_cast<size_t>(sources[j])];
      if (d == 0) throw std::invalid_argument("label_vertices: sources must be distinct");
      int dt = delays[i] - delays[j];
      if (dt <= -d || dt >= d)
        throw std::invalid_argument("label_vertices: delay difference not below distance");
      if ((dt - d) % 2 != 0)
        throw std::invalid_argument("label_vertices: delay difference has wrong parity");
    }
  std::vector<int> l(static_cast<size_t>(q.vertex_count()), std::numeric_limits<int>::max());
  for (int v = 0; v < q.vertex_count(); ++v)
    for (size_t i = 0; i < p; ++i)
      l[static_cast<size_t>(v)] =
          std::min(l[static_cast<size_t>(v)], delays[i] + dist[i][static_cast<size_t>(v)]);
  return l;
}

ForwardResult forward_bijection(const PointedQuadrangulation& pq) {
  const PlanarMap& Q = pq.map;
  if (!is_quadrangulation(Q)) throw std::invalid_argument("forward_bijection: not a quadrangulation");
  std::vector<int> l = label_vertices(Q, pq.sources, pq.delays);
  int p = static_cast<int>(pq.sources.size());
  int nH = Q.half_edge_count();
  int n_faces = Q.face_count();

  // one new edge per face, its two ends parked at corners of that face
  std::vector<int> end_at(static_cast<size_t>(nH), -1);  // corner h -> M half-edge
  std::vector<int> reps = Q.face_representatives();
  auto put_end = [&end_at](int corner, int id) {
    if (end_at[static_cast<size_t>(corner)] != -1)
      throw std::logic_error("forward_bijection: corner used twice");
    end_at[static_cast<size_t>(corner)] = id;
  };
  for (int f = 0; f < n_faces; ++f) {
    std::vector<int> orbit = Q.face_orbit(reps[static_cast<size_t>(f)]);  // clockwise tails
    int lab[4];
    for (int i = 0; i < 4; ++i) lab[i] = l[static_cast<size_t>(Q.vertex_of(orbit[static_cast<size_t>(i)]))];
    int lmin = std::min({lab[0], lab[1], lab[2], lab[3]});
    bool simple = false;
    int i0 = -1;
    for (int i = 0; i < 4; ++i) {
      if (lab[i] == lmin + 2) simple = true;
      if (lab[i] == lmin) i0 = i;
    }
    if (simple) {
      // clockwise reading from the minimum: l, l+1, l+2, l+1; the selected
      // edge is the third step, from the l+2 vertex down to l+1
      put_end(orbit[static_cast<size_t>((i0 + 2) % 4)], 2 * f);
      put_end(orbit[static_cast<size_t>((i0 + 3) % 4)], 2 * f + 1);
    } else {
      int i1 = (lab[0] == lmin + 1) ? 0 : 1;
      put_end(orbit[static_cast<size_t>(i1)], 2 * f);
      put_end(orbit[static_cast<size_t>((i1 + 2) % 4)], 2 * f + 1);
    }
  }

  std::vector<char> is_source(static_cast<size_t>(Q.vertex_count()), 0);
  for (int s : pq.sources) is_source[static_cast<size_t>(s)] = 1;
  std::vector<char> occupied_vertex(static_cast<size_t>(Q.vertex_count()), 0);
  for (int h = 0; h < nH; ++h)
    if (end_at[static_cast<size_t>(h)] != -1) occupied_vertex[static_cast<size_t>(Q.vertex_of(h))] = 1;
  for (int v = 0; v < Q.vertex_count(); ++v)
    if (occupied_vertex[static_cast<size_t>(v)] == is_source[static_cast<size_t>(v)])
      throw std::logic_error("forward_bijection: vertex coverage is off");

  // rotation of the new map: consecutive occupied corners around each vertex
  int nM = 2 * n_faces;
  std::vector<int> alphaM(static_cast<size_t>(nM)), sigmaM(static_cast<size_t>(nM));
  for (int e = 0; e < nM; ++e) alphaM[static_cast<size_t>(e)] = e ^ 1;
  std::vector<int> corner_of(static_cast<size_t>(nM));
  for (int h = 0; h < nH; ++h)
    if (end_at[static_cast<size_t>(h)] != -1) corner_of[static_cast<size_t>(end_at[static_cast<size_t>(h)])] = h;
  for (int e = 0; e < nM; ++e) {
    int cur = Q.sigma(corner_of[static_cast<size_t>(e)]);
    while (end_at[static_cast<size_t>(cur)] == -1) cur = Q.sigma(cur);
    sigmaM[static_cast<size_t>(e)] = end_at[static_cast<size_t>(cur)];
  }
  PlanarMap M(alphaM, sigmaM);
  if (M.face_count() != p) throw std::logic_error("forward_bijection: face count != p");
  if (M.genus() != 0) throw std::logic_error("forward_bijection: image not planar");

  std::vector<int> vertex_image(static_cast<size_t>(Q.vertex_count()), -1);
  std::vector<int> labelsM(static_cast<size_t>(M.vertex_count()), 0);
  for (int e = 0; e < nM; ++e) {
    int qv = Q.vertex_of(corner_of[static_cast<size_t>(e)]);
    vertex_image[static_cast<size_t>(qv)] = M.vertex_of(e);
    labelsM[static_cast<size_t>(M.vertex_of(e))] = l[static_cast<size_t>(qv)];
  }

  // overlay of Q and M decides which face of M encloses each source
  int nO = nH + nM;
  std::vector<int> alphaO(static_cast<size_t>(nO)), sigmaO(static_cast<size_t>(nO));
  for (int h = 0; h < nH; ++h) {
    alphaO[static_cast<size_t>(h)] = Q.alpha(h);
    int s = Q.sigma(h);
    sigmaO[static_cast<size_t>(h)] =
        end_at[static_cast<size_t>(s)] != -1 ? nH + end_at[static_cast<size_t>(s)] : s;
  }
  for (int e = 0; e < nM; ++e) {
    alphaO[static_cast<size_t>(nH + e)] = nH + (e ^ 1);
    sigmaO[static_cast<size_t>(nH + e)] = corner_of[static_cast<size_t>(e)];
  }
  PlanarMap O(alphaO, sigmaO);
  UnionFind uf(O.face_count());
  for (int h = 0; h < nH; ++h) uf.unite(O.face_of(h), O.face_of(O.alpha(h)));

  std::vector<int> first_out(static_cast<size_t>(Q.vertex_count()), -1);
  for (int h = 0; h < nH; ++h)
    if (first_out[static_cast<size_t>(Q.vertex_of(h))] == -1)
      first_out[static_cast<size_t>(Q.vertex_of(h))] = h;
  std::vector<int> face_reps(static_cast<size_t>(p), -1);
  std::vector<char> face_taken(static_cast<size_t>(p), 0);
  for (int i = 0; i < p; ++i) {
    int cls = uf.find(O.face_of(first_out[static_cast<size_t>(pq.sources[static_cast<size_t>(i)])]));
    for (int e = 0; e < nM && face_reps[static_cast<size_t>(i)] == -1; ++e)
      if (uf.find(O.face_of(nH + e)) == cls) face_reps[static_cast<size_t>(i)] = e;
    if (face_reps[static_cast<size_t>(i)] == -1)
      throw std::logic_error("forward_bijection: source face not found");
    int fid = M.face_of(face_reps[static_cast<size_t>(i)]);
    if (face_taken[static_cast<size_t>(fid)])
      throw std::logic_error("forward_bijection: two sources in one face");
    face_taken[static_cast<size_t>(fid)] = 1;
  }

  LabeledMap out{std::move(M), std::move(labelsM), std::move(face_reps)};
  if (!out.well_labeled()) throw std::logic_error("forward_bijection: image not well-labeled");
  return ForwardResult{std::move(out), std::move(vertex_image)};
}

InverseResult inverse_bijection(const LabeledMap& m) {
  const PlanarMap& M = m.map;
  int p = static_cast<int>(m.face_reps.size());
  if (M.face_count() != p)
    throw std::invalid_argument("inverse_bijection: every face must be distinguished");
  if (!m.well_labeled()) throw std::invalid_argument("inverse_bijection: labels jump by more than 1");
  std::vector<char> face_seen(static_cast<size_t>(p), 0);
  for (int rep : m.face_reps) {
    int f = M.face_of(rep);
    if (face_seen[static_cast<size_t>(f)])
      throw std::invalid_argument("inverse_bijection: duplicate distinguished face");
    face_seen[static_cast<size_t>(f)] = 1;
  }

  int nC = M.half_edge_count();  // one corner, hence one arch, per half-edge
  int nQ = 2 * nC;               // arch c has halves 2c (at corner c) and 2c+1
  std::vector<int> alphaQ(static_cast<size_t>(nQ));
  for (int h = 0; h < nQ; ++h) alphaQ[static_cast<size_t>(h)] = h ^ 1;

  // sorted outgoing/incoming Q-half-edges per corner, and per-source fans
  std::vector<std::vector<int>> at_corner(static_cast<size_t>(nC));
  std::vector<std::vector<int>> at_source(static_cast<size_t>(p));
  std::vector<int> delays(static_cast<size_t>(p), 0);

  for (int i = 0; i < p; ++i) {
    std::vector<int> orbit = M.face_orbit(m.face_reps[static_cast<size_t>(i)]);
    int deg = static_cast<int>(orbit.size());
    // the phi orbit is clockwise; corners counterclockwise
    std::vector<int> pos(static_cast<size_t>(deg));
    for (int k = 0; k < deg; ++k) pos[static_cast<size_t>(k)] = orbit[static_cast<size_t>((deg - k) % deg)];
    std::vector<int> lab(static_cast<size_t>(deg));
    int lmin = std::numeric_limits<int>::max();
    for (int k = 0; k < deg; ++k) {
      lab[static_cast<size_t>(k)] = m.labels[static_cast<size_t>(M.vertex_of(pos[static_cast<size_t>(k)]))];
      lmin = std::min(lmin, lab[static_cast<size_t>(k)]);
    }
    delays[static_cast<size_t>(i)] = lmin - 1;

    // successor: first corner of label one less, counterclockwise
    int lmax = *std::max_element(lab.begin(), lab.end());
    std::vector<int> next_seen(static_cast<size_t>(lmax - lmin + 1), -1);
    std::vector<int> succ(static_cast<size_t>(deg), -1);
    for (int k = 2 * deg - 1; k >= 0; --k) {
      int kk = k % deg;
      if (lab[static_cast<size_t>(kk)] > lmin)
        succ[static_cast<size_t>(kk)] = next_seen[static_cast<size_t>(lab[static_cast<size_t>(kk)] - 1 - lmin)];
      next_seen[static_cast<size_t>(lab[static_cast<size_t>(kk)] - lmin)] = kk;
    }
    struct End {
      int delta;
      int half;
    };
    std::vector<std::vector<End>> ends(static_cast<size_t>(deg));
    for (int k = 0; k < deg; ++k) {
      int c = pos[static_cast<size_t>(k)];
      if (lab[static_cast<size_t>(k)] == lmin) {
        // chord to the source: angularly first at the corner
        ends[static_cast<size_t>(k)].push_back({0, 2 * c});
        at_source[static_cast<size_t>(i)].push_back(2 * c + 1);
      } else {
        int j = succ[static_cast<size_t>(k)];
        if (j < 0) throw std::invalid_argument("inverse_bijection: no successor corner");
        ends[static_cast<size_t>(k)].push_back({(j - k + deg) % deg, 2 * c});
        ends[static_cast<size_t>(j)].push_back({(k - j + deg) % deg, 2 * c + 1});
      }
    }
    for (int k = 0; k < deg; ++k) {
      auto& v = ends[static_cast<size_t>(k)];
      std::sort(v.begin(), v.end(), [](const End& a, const End& b) { return a.delta < b.delta; });
      auto& dst = at_corner[static_cast<size_t>(pos[static_cast<size_t>(k)])];
      dst.reserve(v.size());
      for (const End& e : v) dst.push_back(e.half);
    }
  }

  // rotation of the quadrangulation: sweep the corners of each vertex of M
  // counterclockwise, then append the source fans
  std::vector<int> sigmaQ(static_cast<size_t>(nQ), -1);
  std::vector<int> probe(static_cast<size_t>(M.vertex_count()), -1);
  for (int h = 0; h < nC; ++h)
    if (probe[static_cast<size_t>(M.vertex_of(h))] == -1) probe[static_cast<size_t>(M.vertex_of(h))] = h;
  std::vector<int> first_half_of_vertex(static_cast<size_t>(M.vertex_count()), -1);
  for (int v = 0; v < M.vertex_count(); ++v) {
    std::vector<int> cycle;
    int h = probe[static_cast<size_t>(v)];
    int start = h;
    do {
      for (int half : at_corner[static_cast<size_t>(h)]) cycle.push_back(half);
      h = M.sigma(h);
    } while (h != start);
    for (size_t k = 0; k < cycle.size(); ++k)
      sigmaQ[static_cast<size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    first_half_of_vertex[static_cast<size_t>(v)] = cycle.front();
  }
  std::vector<int> first_half_of_source(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) {
    auto& fan = at_source[static_cast<size_t>(i)];
    if (fan.empty()) throw std::logic_error("inverse_bijection: empty source fan");
    for (size_t k = 0; k < fan.size(); ++k)
      sigmaQ[static_cast<size_t>(fan[k])] = fan[(k + 1) % fan.size()];
    first_half_of_source[static_cast<size_t>(i)] = fan.front();
  }

  PlanarMap Q(std::move(alphaQ), std::move(sigmaQ));
  std::vector<int> vertex_image(static_cast<size_t>(M.vertex_count()));
  for (int v = 0; v < M.vertex_count(); ++v)
    vertex_image[static_cast<size_t>(v)] = Q.vertex_of(first_half_of_vertex[static_cast<size_t>(v)]);
  std::vector<int> sources(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i)
    sources[static_cast<size_t>(i)] = Q.vertex_of(first_half_of_source[static_cast<size_t>(i)]);
  return InverseResult{PointedQuadrangulation{std::move(Q), std::move(sources), std::move(delays)},
                       std::move(vertex_image)};
}

std::vector<int> delays_for_triple(const DistanceTriple& d) {
  if (!d.valid() || d.d12 == 0 || d.d23 == 0 || d.d31 == 0)
    throw std::invalid_argument("delays_for_triple: invalid triple");
  int s, t, u;
  d.stu(s, t, u);
  if (s == 0 || t == 0 || u == 0)
    throw AlignedTripleError("delays_for_triple: aligned triple, use the two-source variant");
  return {-s, -t, -u};
}

TripleConstraintReport verify_triple_constraints(const LabeledMap& m, int s, int t, int u) {
  if (m.face_reps.size() != 3)
    throw std::invalid_argument("verify_triple_constraints: expected three faces");
  TripleConstraintReport rep;
  int want[3] = {1 - s, 1 - t, 1 - u};
  rep.face_minima_ok = true;
  for (int i = 0; i < 3; ++i)
    rep.face_minima_ok =
        rep.face_minima_ok && m.face_min_label(m.face_reps[static_cast<size_t>(i)]) == want[i];
  rep.boundary_minima_ok = true;
  for (int i = 0; i < 3; ++i) {
    bool exists = false;
    int bmin = m.boundary_min_label(m.face_reps[static_cast<size_t>(i)],
                                    m.face_reps[static_cast<size_t>((i + 1) % 3)], exists);
    rep.boundary_minima_ok = rep.boundary_minima_ok && exists && bmin == 0;
  }
  rep.backbone_type =
      backbone(m.map, {m.face_reps[0], m.face_reps[1], m.face_reps[2]});
  return rep;
}

AlignedConstraintReport verify_aligned_constraints(const LabeledMap& m, int s, int t,
                                                   int marked_vertex) {
  if (m.face_reps.size() != 2)
    throw std::invalid_argument("verify_aligned_constraints: expected two faces");
  AlignedConstraintReport rep;
  rep.face_minima_ok = m.face_min_label(m.face_reps[0]) == 1 - s &&
                       m.face_min_label(m.face_reps[1]) == 1 - t;
  bool exists = false;
  rep.boundary_min_ok = m.boundary_min_label(m.face_reps[0], m.face_reps[1], exists) == 0 && exists;
  bool on_both = false;
  {
    std::vector<char> on_a(static_cast<size_t>(m.map.vertex_count()), 0);
    for (int h : m.map.face_orbit(m.face_reps[0])) on_a[static_cast<size_t>(m.map.vertex_of(h))] = 1;
    for (int h : m.map.face_orbit(m.face_reps[1]))
      if (m.map.vertex_of(h) == marked_vertex && on_a[static_cast<size_t>(marked_vertex)]) on_both = true;
  }
  rep.marked_on_boundary_ok = m.labels[static_cast<size_t>(marked_vertex)] == 0 && on_both;
  return rep;
}

}  // namespace quadmaps
