#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "quadmaps/bijection.hpp"
#include "quadmaps/labeled_map.hpp"

namespace quadmaps {

// Plane tree with n edges, uniform via the cycle lemma, with independent
// uniform {-1,0,+1} label increments per edge shifted so the minimum label
// is 1. One distinguished face (the outer one). Feeding this to
// inverse_bijection yields a uniform (quadrangulation, pointed vertex) pair.
LabeledMap sample_labeled_tree(int n, std::mt19937_64& rng);

PointedQuadrangulation sample_pointed_quadrangulation(int n, uint64_t seed);

// Distances from the pointed vertex to a uniform non-pointed vertex,
// rescaled by n^{1/4}. Sorted ascending; one value per sample. Works on the
// tree labels directly (label = distance to the pointed vertex), so no
// quadrangulation is built.
std::vector<double> empirical_two_point(int n, int samples, uint64_t seed);

// sup_x |F_emp(x) - cdf(x)| for a sorted sample
double ks_distance(const std::vector<double>& sorted_sample,
                   const std::function<double(double)>& cdf);

struct DistanceTripleSample {
  double d12, d23, d31;
};

// Pairwise rescaled distances between the pointed vertex and two uniform
// further vertices. Builds each quadrangulation and runs one BFS.
std::vector<DistanceTripleSample> empirical_three_point(int n, int samples, uint64_t seed);

struct GeodesicCountStats {
  std::map<int, int64_t> counts;  // c -> occurrences
  int64_t accepted = 0;
  int64_t attempts = 0;

  std::map<int, double> pmf() const;
  double mean() const;
  // total variation against a pmf over c >= 1; mass beyond the sampled
  // support counts fully
  double tv_distance(const std::function<double(int)>& p, int c_max = 256) const;
};

// For source pairs (pointed vertex, uniform vertex) at distance d12 >= d_min,
// count vertices v with d1(v) = s and d1(v) + d2(v) = d12. One count per
// accepted pair; pairs below d_min are discarded before the quadrangulation
// is built. Throws when fewer than 50 pairs are accepted.
GeodesicCountStats empirical_geodesic_counts(int s, int d_min, int n, int samples,
                                             uint64_t seed);

// Class frequencies of (quadrangulation, pointed vertex) samples, keyed by
// the minimum of canonical_code over all rootings with the pointed vertex
// marked. Comparable with the exhaustive tallies from enumerate.
std::map<std::vector<int64_t>, int64_t> sample_pointed_class_counts(int n, int64_t samples,
                                                                    uint64_t seed);

// canonical class key used by sample_pointed_class_counts
std::vector<int64_t> pointed_class_key(const PlanarMap& q, int pointed_vertex);

uint64_t splitmix64(uint64_t x);

}  // namespace quadmaps
