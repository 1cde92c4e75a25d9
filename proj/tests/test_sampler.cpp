#include <quadmaps/enumerate.hpp>
#include <quadmaps/gf_discrete.hpp>
#include <quadmaps/sampler.hpp>

#include <cmath>
#include <random>

#include "doctest.h"

using namespace quadmaps;

TEST_CASE("sampled trees are well formed") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 40);
    LabeledMap lm = sample_labeled_tree(n, rng);
    CHECK(lm.map.edge_count() == n);
    CHECK(lm.map.face_count() == 1);
    CHECK(lm.map.genus() == 0);
    CHECK(lm.well_labeled());
    int mn = lm.labels[0];
    for (int l : lm.labels) mn = std::min(mn, l);
    CHECK(mn == 1);  // labels are shifted to minimum 1
  }
}

TEST_CASE("sampled quadrangulations are quadrangulations") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    PointedQuadrangulation pq = sample_pointed_quadrangulation(12, seed);
    CHECK(is_quadrangulation(pq.map));
    CHECK(pq.map.face_count() == 12);
    CHECK(pq.sources.size() == 1);
  }
}

TEST_CASE("distance law at n = 2 matches the series exactly") {
  // P(d) proportional to [g^2] two_point(d): 7, 11/2, 1 for d = 1, 2, 3
  auto sample = empirical_two_point(2, 40000, 99);
  double scale = std::pow(2.0, 0.25);
  int hist[4] = {0, 0, 0, 0};
  for (double x : sample) {
    int d = static_cast<int>(std::lround(x * scale));
    REQUIRE(d >= 1);
    REQUIRE(d <= 3);
    ++hist[d];
  }
  double total = 7 + 5.5 + 1;
  double want[4] = {0, 7 / total, 5.5 / total, 1 / total};
  for (int d = 1; d <= 3; ++d) {
    double p = hist[d] / 40000.0;
    double sigma = std::sqrt(want[d] * (1 - want[d]) / 40000.0);
    CHECK(std::abs(p - want[d]) < 5 * sigma);
  }
}

TEST_CASE("pointed class frequencies follow the preimage counts at n = 2") {
  auto oracle = oracle_pointed_class_counts(2);
  auto seen = sample_pointed_class_counts(2, 30000, 123);
  REQUIRE(seen.size() == oracle.size());
  int64_t oracle_total = 0;
  for (auto& [k, c] : oracle) oracle_total += c;
  for (auto& [key, count] : seen) {
    REQUIRE(oracle.count(key) == 1);
    double want = static_cast<double>(oracle.at(key)) / oracle_total;
    double p = count / 30000.0;
    double sigma = std::sqrt(want * (1 - want) / 30000.0);
    CHECK(std::abs(p - want) < 5 * sigma);
  }
}

TEST_CASE("ks_distance on the uniform law") {
  std::vector<double> pts;
  int n = 1000;
  for (int i = 0; i < n; ++i) pts.push_back((i + 0.5) / n);
  double ks = ks_distance(pts, [](double x) { return std::min(1.0, std::max(0.0, x)); });
  CHECK(ks == doctest::Approx(0.5 / n).epsilon(1e-9));
}

TEST_CASE("three-point samples satisfy the triangle constraints") {
  auto triples = empirical_three_point(20, 200, 7);
  CHECK(triples.size() == 200);
  double scale = std::pow(20.0, 0.25);
  for (auto& t : triples) {
    DistanceTriple d{static_cast<int>(std::lround(t.d12 * scale)),
                     static_cast<int>(std::lround(t.d23 * scale)),
                     static_cast<int>(std::lround(t.d31 * scale))};
    CHECK(d.valid());
  }
}

TEST_CASE("geodesic count statistics are sane") {
  GeodesicCountStats st = empirical_geodesic_counts(1, 6, 400, 4000, 21);
  CHECK(st.attempts == 4000);
  CHECK(st.accepted >= 50);
  double mass = 0;
  for (auto& [c, k] : st.pmf()) {
    CHECK(c >= 1);
    mass += k;
  }
  CHECK(mass == doctest::Approx(1.0));
  CHECK(st.mean() >= 1.0);
}

TEST_CASE("splitmix64 decorrelates consecutive seeds") {
  uint64_t a = splitmix64(1), b = splitmix64(2);
  int diff = 0;
  for (int bit = 0; bit < 64; ++bit) diff += ((a >> bit) & 1) != ((b >> bit) & 1);
  CHECK(diff > 16);
  CHECK(diff < 48);
}
