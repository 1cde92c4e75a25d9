#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "quadmaps/planar_map.hpp"
#include "quadmaps/series.hpp"

namespace quadmaps {

// Exhaustive generation of quadrangulations with n faces by running every
// (rooted plane tree with n edges) x (3^n label increment choices) through
// the inverse bijection and deduplicating up to isomorphism. Practical for
// n <= 6; the tuple counters below weight each map by r(q)/4n where r(q) is
// its number of distinct rootings, so they match the generating-series
// coefficients (which carry 1/|Aut| symmetry factors) exactly.

std::vector<PlanarMap> enumerate_quadrangulations(int n);

// r(q) / 4n = 1 / |Aut(q)|
Rational rooting_weight(const PlanarMap& q);

// distance -> weighted number of ordered vertex pairs at that distance
std::map<int, Rational> count_pairs(int n);

// (d12,d23,d31) -> weighted number of ordered vertex triples
std::map<std::array<int, 3>, Rational> count_triples(int n);

// weighted number of ordered pairs of distinct vertices, any distance
Rational total_pairs(int n);

// (q, pointed vertex) class -> number of (tree, labeling) preimages, keyed
// like sampler's pointed_class_key; the sampler must hit each class with
// probability proportional to this count
std::map<std::vector<int64_t>, int64_t> oracle_pointed_class_counts(int n);

// c -> weighted number of ordered pairs at distance s+t having exactly c
// vertices v with d(v1,v) = s and d(v,v2) = t
std::map<int, Rational> oracle_geodesic_pair_counts(int n, int s, int t);

}  // namespace quadmaps
