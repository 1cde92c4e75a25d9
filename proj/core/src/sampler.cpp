#include "quadmaps/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace quadmaps {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

// Uniform Dyck word of length 2n by the cycle lemma: shuffle n up-steps and
// n+1 down-steps, rotate to start right after the first prefix-sum minimum,
// drop the final (down) step.
void sample_dyck(int n, std::mt19937_64& rng, std::vector<int8_t>& word,
                 std::vector<int8_t>& scratch) {
  const int len = 2 * n + 1;
  scratch.assign(static_cast<size_t>(len), -1);
  std::fill(scratch.begin(), scratch.begin() + n, int8_t{1});
  std::shuffle(scratch.begin(), scratch.end(), rng);
  int sum = 0, best = 1, best_at = -1;
  for (int i = 0; i < len; ++i) {
    sum += scratch[static_cast<size_t>(i)];
    if (sum < best) {
      best = sum;
      best_at = i;
    }
  }
  word.resize(static_cast<size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i)
    word[static_cast<size_t>(i)] = scratch[static_cast<size_t>((best_at + 1 + i) % len)];
}

// Rooted plane tree with n edges plus label increments, as a rotation system.
// Edge e (in contour creation order) gets half-edges 2e out of the parent and
// 2e+1 out of the child; sigma follows the contour encounter order at each
// vertex. Vertex ids are in creation order, root 0; `label` is shifted so its
// minimum is 1.
struct RawTree {
  std::vector<int> alpha, sigma, tailv;
  std::vector<int> first_out;  // one half-edge out of each vertex
  std::vector<int> label;
};

void sample_raw_tree(int n, std::mt19937_64& rng, RawTree& t, std::vector<int8_t>& word,
                     std::vector<int8_t>& scratch, std::vector<int>& stack,
                     std::vector<int>& prev_out) {
  sample_dyck(n, rng, word, scratch);
  const size_t nh = static_cast<size_t>(2 * n);
  t.alpha.resize(nh);
  t.sigma.resize(nh);
  t.tailv.resize(nh);
  t.first_out.assign(static_cast<size_t>(n + 1), -1);
  t.label.resize(static_cast<size_t>(n + 1));
  prev_out.assign(static_cast<size_t>(n + 1), -1);
  stack.clear();
  stack.push_back(0);
  t.label[0] = 0;
  int created = 1, edge = 0, lmin = 0;
  std::uniform_int_distribution<int> inc(-1, 1);
  for (int8_t step : word) {
    if (step > 0) {
      const int v = stack.back(), w = created++;
      const int down = 2 * edge, up = 2 * edge + 1;
      ++edge;
      t.alpha[static_cast<size_t>(down)] = up;
      t.alpha[static_cast<size_t>(up)] = down;
      t.tailv[static_cast<size_t>(down)] = v;
      t.tailv[static_cast<size_t>(up)] = w;
      if (prev_out[static_cast<size_t>(v)] >= 0)
        t.sigma[static_cast<size_t>(prev_out[static_cast<size_t>(v)])] = down;
      else
        t.first_out[static_cast<size_t>(v)] = down;
      prev_out[static_cast<size_t>(v)] = down;
      t.first_out[static_cast<size_t>(w)] = up;
      prev_out[static_cast<size_t>(w)] = up;
      const int l = t.label[static_cast<size_t>(v)] + inc(rng);
      t.label[static_cast<size_t>(w)] = l;
      lmin = std::min(lmin, l);
      stack.push_back(w);
    } else {
      stack.pop_back();
    }
  }
  for (int v = 0; v <= n; ++v)
    if (prev_out[static_cast<size_t>(v)] >= 0)
      t.sigma[static_cast<size_t>(prev_out[static_cast<size_t>(v)])] =
          t.first_out[static_cast<size_t>(v)];
  const int shift = 1 - lmin;
  for (int& l : t.label) l += shift;
}

LabeledMap raw_to_labeled(const RawTree& t) {
  LabeledMap lm{PlanarMap(t.alpha, t.sigma), {}, {0}};
  lm.labels.assign(static_cast<size_t>(lm.map.vertex_count()), 0);
  for (int h = 0; h < lm.map.half_edge_count(); ++h)
    lm.labels[static_cast<size_t>(lm.map.vertex_of(h))] =
        t.label[static_cast<size_t>(t.tailv[static_cast<size_t>(h)])];
  return lm;
}

}  // namespace

LabeledMap sample_labeled_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("sample_labeled_tree: n must be positive");
  RawTree t;
  std::vector<int8_t> word, scratch;
  std::vector<int> stack, prev_out;
  sample_raw_tree(n, rng, t, word, scratch, stack, prev_out);
  return raw_to_labeled(t);
}

PointedQuadrangulation sample_pointed_quadrangulation(int n, uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  return inverse_bijection(sample_labeled_tree(n, rng)).pointed;
}

std::vector<double> empirical_two_point(int n, int samples, uint64_t seed) {
  if (n < 1 || samples < 1) throw std::invalid_argument("empirical_two_point: bad parameters");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(samples));
  const double scale = std::pow(static_cast<double>(n), 0.25);
  std::vector<int8_t> word, scratch;
  std::vector<int> lab(static_cast<size_t>(n + 1)), stack;
  std::uniform_int_distribution<int> inc(-1, 1);
  std::uniform_int_distribution<int> pick(0, n);
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ static_cast<uint64_t>(i)));
    sample_dyck(n, rng, word, scratch);
    stack.clear();
    stack.push_back(0);
    lab[0] = 0;
    int created = 1, lmin = 0;
    for (int8_t step : word) {
      if (step > 0) {
        const int l = lab[static_cast<size_t>(stack.back())] + inc(rng);
        lab[static_cast<size_t>(created)] = l;
        lmin = std::min(lmin, l);
        stack.push_back(created++);
      } else {
        stack.pop_back();
      }
    }
    const int d = lab[static_cast<size_t>(pick(rng))] + 1 - lmin;
    out.push_back(static_cast<double>(d) / scale);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ks_distance(const std::vector<double>& sorted_sample,
                   const std::function<double(double)>& cdf) {
  const size_t n = sorted_sample.size();
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted_sample[i]);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    worst = std::max(worst, std::max(std::abs(f - lo), std::abs(hi - f)));
  }
  return worst;
}

std::vector<DistanceTripleSample> empirical_three_point(int n, int samples, uint64_t seed) {
  if (n < 1 || samples < 1) throw std::invalid_argument("empirical_three_point: bad parameters");
  std::vector<DistanceTripleSample> out;
  out.reserve(static_cast<size_t>(samples));
  const double scale = std::pow(static_cast<double>(n), 0.25);
  RawTree t;
  std::vector<int8_t> word, scratch;
  std::vector<int> stack, prev_out;
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ static_cast<uint64_t>(i)));
    sample_raw_tree(n, rng, t, word, scratch, stack, prev_out);
    std::uniform_int_distribution<int> pick(0, n);
    int v1 = pick(rng), v2 = pick(rng);
    while (v2 == v1) v2 = pick(rng);
    const LabeledMap lm = raw_to_labeled(t);
    const InverseResult inv = inverse_bijection(lm);
    const PlanarMap& q = inv.pointed.map;
    const int pm1 = lm.map.vertex_of(t.first_out[static_cast<size_t>(v1)]);
    const int pm2 = lm.map.vertex_of(t.first_out[static_cast<size_t>(v2)]);
    const std::vector<int> dist =
        bfs_distances(q, inv.vertex_image[static_cast<size_t>(pm1)]);
    DistanceTripleSample s{};
    s.d12 = static_cast<double>(lm.labels[static_cast<size_t>(pm1)]) / scale;
    s.d31 = static_cast<double>(lm.labels[static_cast<size_t>(pm2)]) / scale;
    s.d23 = static_cast<double>(dist[static_cast<size_t>(
                inv.vertex_image[static_cast<size_t>(pm2)])]) /
            scale;
    out.push_back(s);
  }
  return out;
}

std::map<int, double> GeodesicCountStats::pmf() const {
  std::map<int, double> p;
  for (const auto& [c, k] : counts)
    p[c] = static_cast<double>(k) / static_cast<double>(accepted);
  return p;
}

double GeodesicCountStats::mean() const {
  double s = 0.0;
  for (const auto& [c, k] : counts) s += static_cast<double>(c) * static_cast<double>(k);
  return s / static_cast<double>(accepted);
}

double GeodesicCountStats::tv_distance(const std::function<double(int)>& p, int c_max) const {
  const std::map<int, double> emp = pmf();
  double tv = 0.0;
  for (int c = 1; c <= c_max; ++c) {
    const auto it = emp.find(c);
    const double e = it == emp.end() ? 0.0 : it->second;
    tv += std::abs(e - p(c));
  }
  for (const auto& [c, e] : emp)
    if (c > c_max) tv += e;
  return tv / 2.0;
}

GeodesicCountStats empirical_geodesic_counts(int s, int d_min, int n, int samples,
                                             uint64_t seed) {
  if (s < 1 || d_min < 1 || n < 1 || samples < 1)
    throw std::invalid_argument("empirical_geodesic_counts: bad parameters");
  GeodesicCountStats stats;
  RawTree t;
  std::vector<int8_t> word, scratch;
  std::vector<int> stack, prev_out, d1q;
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ static_cast<uint64_t>(i)));
    sample_raw_tree(n, rng, t, word, scratch, stack, prev_out);
    std::uniform_int_distribution<int> pick(0, n);
    const int v2 = pick(rng);
    ++stats.attempts;
    const int d12 = t.label[static_cast<size_t>(v2)];
    if (d12 < d_min) continue;  // cheap rejection before any map is built
    const LabeledMap lm = raw_to_labeled(t);
    const InverseResult inv = inverse_bijection(lm);
    const PlanarMap& q = inv.pointed.map;
    d1q.assign(static_cast<size_t>(q.vertex_count()), 0);
    for (int v = 0; v < lm.map.vertex_count(); ++v)
      d1q[static_cast<size_t>(inv.vertex_image[static_cast<size_t>(v)])] =
          lm.labels[static_cast<size_t>(v)];
    const int pm2 = lm.map.vertex_of(t.first_out[static_cast<size_t>(v2)]);
    const std::vector<int> d2 =
        bfs_distances(q, inv.vertex_image[static_cast<size_t>(pm2)]);
    int c = 0;
    for (int v = 0; v < q.vertex_count(); ++v)
      if (d1q[static_cast<size_t>(v)] == s &&
          d1q[static_cast<size_t>(v)] + d2[static_cast<size_t>(v)] == d12)
        ++c;
    ++stats.counts[c];
    ++stats.accepted;
  }
  if (stats.accepted < 50)
    throw std::runtime_error("empirical_geodesic_counts: only " +
                             std::to_string(stats.accepted) + " pairs reached d_min");
  return stats;
}

std::vector<int64_t> pointed_class_key(const PlanarMap& q, int pointed_vertex) {
  std::vector<int> ann(static_cast<size_t>(q.vertex_count()), 0);
  ann[static_cast<size_t>(pointed_vertex)] = 1;
  std::vector<int64_t> best;
  for (int root = 0; root < q.half_edge_count(); ++root) {
    std::vector<int64_t> code = canonical_code(q, root, &ann);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::map<std::vector<int64_t>, int64_t> sample_pointed_class_counts(int n, int64_t samples,
                                                                    uint64_t seed) {
  std::map<std::vector<int64_t>, int64_t> tally;
  RawTree t;
  std::vector<int8_t> word, scratch;
  std::vector<int> stack, prev_out;
  for (int64_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ static_cast<uint64_t>(i)));
    sample_raw_tree(n, rng, t, word, scratch, stack, prev_out);
    const InverseResult inv = inverse_bijection(raw_to_labeled(t));
    ++tally[pointed_class_key(inv.pointed.map, inv.pointed.sources[0])];
  }
  return tally;
}

}  // namespace quadmaps
