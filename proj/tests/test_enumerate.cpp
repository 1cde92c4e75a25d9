#include <quadmaps/enumerate.hpp>
#include <quadmaps/gf_discrete.hpp>

#include "doctest.h"

using namespace quadmaps;

TEST_CASE("map counts by number of faces") {
  // 1, 3, 7 quadrangulations up to isomorphism (pseudo-quadrangulations
  // with multiple edges included)
  CHECK(enumerate_quadrangulations(1).size() == 1);
  CHECK(enumerate_quadrangulations(2).size() == 3);
  CHECK(enumerate_quadrangulations(3).size() == 7);
}

TEST_CASE("rooting weights sum to the rooted count over 4n") {
  for (int n = 1; n <= 3; ++n) {
    Rational total = 0;
    for (const auto& q : enumerate_quadrangulations(n)) total += rooting_weight(q);
    // rooted maps: 2 3^n binom(2n,n) / ((n+1)(n+2)), divided by 4n rootings
    Rational want = 2;
    for (int k = 0; k < n; ++k) want *= 3;
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), 2 * static_cast<unsigned>(n), static_cast<unsigned>(n));
    want *= Rational(bin);
    want /= (n + 1) * (n + 2);
    want /= 4 * n;
    CHECK(total == want);
  }
}

TEST_CASE("pair counts reproduce the two-point series") {
  for (int n = 1; n <= 3; ++n) {
    auto pairs = count_pairs(n);
    Rational sum = 0;
    for (auto& [d, w] : pairs) {
      CHECK(w == two_point(d, n)[n]);
      sum += w;
    }
    CHECK(sum == total_pairs(n));
  }
}

TEST_CASE("triple counts reproduce the three-point series") {
  for (int n = 1; n <= 3; ++n) {
    auto triples = count_triples(n);
    for (auto& [d, w] : triples) {
      DistanceTriple t{d[0], d[1], d[2]};
      if (t.aligned()) continue;  // series covers non-aligned triples only
      CHECK(w == g_three(t, n)[n]);
    }
  }
}

TEST_CASE("pointed classes at n = 1: end twice as likely as center") {
  auto classes = oracle_pointed_class_counts(1);
  REQUIRE(classes.size() == 2);
  std::vector<int64_t> counts;
  for (auto& [key, c] : classes) counts.push_back(c);
  std::sort(counts.begin(), counts.end());
  CHECK(counts[0] * 2 == counts[1]);
}

TEST_CASE("geodesic pair counts at n = 3, s = t = 1") {
  // pairs at distance 2 split by the number of middle points
  auto counts = oracle_geodesic_pair_counts(3, 1, 1);
  Rational total = 0, weighted = 0;
  for (auto& [c, w] : counts) {
    total += w;
    weighted += c * w;
  }
  CHECK(total == two_point(2, 3)[3]);
  // P(c = 1) = 99/115 at this size
  Rational p1 = counts.at(1) / total;
  CHECK(p1 == Rational(99, 115));
}
