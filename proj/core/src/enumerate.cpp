#include "quadmaps/enumerate.hpp"

#include <stdexcept>

#include "quadmaps/bijection.hpp"
#include "quadmaps/labeled_map.hpp"
#include "quadmaps/sampler.hpp"

namespace quadmaps {

namespace {

// rooted plane trees with n edges as Dyck words (+1/-1, balanced prefixes)
std::vector<std::vector<int8_t>> all_dyck_words(int n) {
  std::vector<std::vector<int8_t>> out;
  std::vector<int8_t> word(static_cast<size_t>(2 * n));
  auto rec = [&](auto&& self, int pos, int open) -> void {
    if (pos == 2 * n) {
      out.push_back(word);
      return;
    }
    if (open < 2 * n - pos) {
      word[static_cast<size_t>(pos)] = 1;
      self(self, pos + 1, open + 1);
    }
    if (open > 0) {
      word[static_cast<size_t>(pos)] = -1;
      self(self, pos + 1, open - 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Rotation system of the plane tree, edges in contour creation order:
// edge e has half 2e out of the parent, 2e+1 out of the child.
struct TreeMap {
  std::vector<int> alpha, sigma, tailv, first_out;
};

TreeMap tree_from_dyck(int n, const std::vector<int8_t>& word) {
  TreeMap t;
  t.alpha.resize(static_cast<size_t>(2 * n));
  t.sigma.resize(static_cast<size_t>(2 * n));
  t.tailv.resize(static_cast<size_t>(2 * n));
  t.first_out.assign(static_cast<size_t>(n + 1), -1);
  std::vector<int> prev_out(static_cast<size_t>(n + 1), -1), stack{0};
  int created = 1, edge = 0;
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
      stack.push_back(w);
    } else {
      stack.pop_back();
    }
  }
  for (int v = 0; v <= n; ++v)
    if (prev_out[static_cast<size_t>(v)] >= 0)
      t.sigma[static_cast<size_t>(prev_out[static_cast<size_t>(v)])] =
          t.first_out[static_cast<size_t>(v)];
  return t;
}

// labels from per-edge increments (child = parent + inc), shifted to min 1
std::vector<int> tree_labels(int n, const std::vector<int8_t>& word,
                             const std::vector<int>& inc) {
  std::vector<int> label(static_cast<size_t>(n + 1)), stack{0};
  label[0] = 0;
  int created = 1, lmin = 0, edge = 0;
  for (int8_t step : word) {
    if (step > 0) {
      const int l = label[static_cast<size_t>(stack.back())] + inc[static_cast<size_t>(edge++)];
      label[static_cast<size_t>(created)] = l;
      lmin = std::min(lmin, l);
      stack.push_back(created++);
    } else {
      stack.pop_back();
    }
  }
  for (int& l : label) l += 1 - lmin;
  return label;
}

LabeledMap assemble(const TreeMap& t, const std::vector<int>& label) {
  LabeledMap lm{PlanarMap(t.alpha, t.sigma), {}, {0}};
  lm.labels.assign(static_cast<size_t>(lm.map.vertex_count()), 0);
  for (int h = 0; h < lm.map.half_edge_count(); ++h)
    lm.labels[static_cast<size_t>(lm.map.vertex_of(h))] =
        label[static_cast<size_t>(t.tailv[static_cast<size_t>(h)])];
  return lm;
}

// visit every (tree, labeling) image (q, pointed vertex)
template <typename Fn>
void for_each_pointed_image(int n, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("enumerate: n must be positive");
  if (n > 6) throw std::invalid_argument("enumerate: n > 6 not supported");
  const auto words = all_dyck_words(n);
  std::vector<int> inc(static_cast<size_t>(n));
  for (const auto& word : words) {
    const TreeMap t = tree_from_dyck(n, word);
    std::fill(inc.begin(), inc.end(), -1);
    for (;;) {
      const InverseResult res = inverse_bijection(assemble(t, tree_labels(n, word, inc)));
      fn(res.pointed.map, res.pointed.sources[0]);
      int k = 0;
      while (k < n && inc[static_cast<size_t>(k)] == 1) inc[static_cast<size_t>(k++)] = -1;
      if (k == n) break;
      ++inc[static_cast<size_t>(k)];
    }
  }
}

std::vector<int64_t> unrooted_key(const PlanarMap& q) {
  std::vector<int64_t> best;
  for (int root = 0; root < q.half_edge_count(); ++root) {
    std::vector<int64_t> code = canonical_code(q, root);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<PlanarMap> enumerate_quadrangulations(int n) {
  std::map<std::vector<int64_t>, PlanarMap> seen;
  for_each_pointed_image(n, [&](const PlanarMap& q, int) {
    std::vector<int64_t> key = unrooted_key(q);
    if (!seen.count(key)) seen.emplace(std::move(key), q);
  });
  std::vector<PlanarMap> out;
  out.reserve(seen.size());
  for (auto& [key, q] : seen) out.push_back(std::move(q));
  return out;
}

Rational rooting_weight(const PlanarMap& q) {
  std::map<std::vector<int64_t>, int> codes;
  for (int root = 0; root < q.half_edge_count(); ++root) ++codes[canonical_code(q, root)];
  Rational w(static_cast<long>(codes.size()), static_cast<long>(q.half_edge_count()));
  w.canonicalize();  // mpq_class(n, d) does not reduce
  return w;
}

std::map<int, Rational> count_pairs(int n) {
  std::map<int, Rational> out;
  for (const PlanarMap& q : enumerate_quadrangulations(n)) {
    const Rational w = rooting_weight(q);
    for (int v = 0; v < q.vertex_count(); ++v) {
      const std::vector<int> dist = bfs_distances(q, v);
      for (int u = 0; u < q.vertex_count(); ++u)
        if (u != v) out[dist[static_cast<size_t>(u)]] += w;
    }
  }
  return out;
}

std::map<std::array<int, 3>, Rational> count_triples(int n) {
  std::map<std::array<int, 3>, Rational> out;
  for (const PlanarMap& q : enumerate_quadrangulations(n)) {
    const Rational w = rooting_weight(q);
    const int nv = q.vertex_count();
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) dist.push_back(bfs_distances(q, v));
    for (int v1 = 0; v1 < nv; ++v1)
      for (int v2 = 0; v2 < nv; ++v2)
        for (int v3 = 0; v3 < nv; ++v3) {
          if (v1 == v2 || v2 == v3 || v3 == v1) continue;
          out[{dist[static_cast<size_t>(v1)][static_cast<size_t>(v2)],
               dist[static_cast<size_t>(v2)][static_cast<size_t>(v3)],
               dist[static_cast<size_t>(v3)][static_cast<size_t>(v1)]}] += w;
        }
  }
  return out;
}

Rational total_pairs(int n) {
  Rational total = 0;
  for (const auto& [d, w] : count_pairs(n)) total += w;
  return total;
}

std::map<std::vector<int64_t>, int64_t> oracle_pointed_class_counts(int n) {
  std::map<std::vector<int64_t>, int64_t> tally;
  for_each_pointed_image(
      n, [&](const PlanarMap& q, int src) { ++tally[pointed_class_key(q, src)]; });
  return tally;
}

std::map<int, Rational> oracle_geodesic_pair_counts(int n, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("oracle_geodesic_pair_counts: s,t >= 1");
  std::map<int, Rational> out;
  for (const PlanarMap& q : enumerate_quadrangulations(n)) {
    const Rational w = rooting_weight(q);
    const int nv = q.vertex_count();
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) dist.push_back(bfs_distances(q, v));
    for (int v1 = 0; v1 < nv; ++v1)
      for (int v2 = 0; v2 < nv; ++v2) {
        if (v1 == v2 || dist[static_cast<size_t>(v1)][static_cast<size_t>(v2)] != s + t)
          continue;
        int c = 0;
        for (int v = 0; v < nv; ++v)
          if (dist[static_cast<size_t>(v1)][static_cast<size_t>(v)] == s &&
              dist[static_cast<size_t>(v)][static_cast<size_t>(v2)] == t)
            ++c;
        out[c] += w;
      }
  }
  return out;
}

}  // namespace quadmaps
