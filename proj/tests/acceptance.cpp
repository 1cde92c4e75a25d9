// Acceptance gate: one line per criterion, exit status = number of failures.
// Statistical criteria use fixed seeds so a failure is reproducible.

#include <quadmaps/bijection.hpp>
#include <quadmaps/continuum.hpp>
#include <quadmaps/enumerate.hpp>
#include <quadmaps/geodesic.hpp>
#include <quadmaps/gf_discrete.hpp>
#include <quadmaps/quadrature.hpp>
#include <quadmaps/sampler.hpp>

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace quadmaps;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %s (%s; %.1f s)\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

double now_minus(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: exact series identities ----

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string first_bad;
  for (const auto& c : verify_identity_suite(5, 24)) {
    if (!c.ok && first_bad.empty()) first_bad = c.name;
    ok = ok && c.ok;
  }
  for (int i = 1; i <= 10 && ok; ++i) {
    Series a = r_series(i, 24, RMethod::closed);
    if (!(a - r_series(i, 24, RMethod::recursive)).is_zero()) {
      ok = false;
      first_bad = "disk series methods, i = " + std::to_string(i);
    }
  }
  double dt = now_minus(t0);
  std::string detail = ok ? "13 identities + disk routes i <= 10, order 24, exact"
                          : "first failure: " + first_bad;
  report(1, "exact series identities", ok && dt < 60.0, detail, dt);
}

// ---- criterion 2: exhaustive enumeration oracle ----

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string bad;
  for (int n = 1; n <= 4 && ok; ++n) {
    for (auto& [d, w] : count_pairs(n))
      if (two_point(d, n)[n] != w) {
        ok = false;
        bad = "pairs n=" + std::to_string(n) + " d=" + std::to_string(d);
        break;
      }
    Rational tri_total = 0;
    for (auto& [k, w] : count_triples(n)) {
      tri_total += w;
      DistanceTriple d{k[0], k[1], k[2]};
      if (d.aligned()) continue;
      if (g_three(d, n)[n] != w) {
        ok = false;
        bad = "triples n=" + std::to_string(n);
        break;
      }
    }
    Rational want = 1;
    for (int k = 0; k < n; ++k) want *= 3;
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), 2 * static_cast<unsigned>(n), static_cast<unsigned>(n));
    want = want * Rational(bin) / 2;
    if (ok && tri_total != want) {
      ok = false;
      bad = "enumerated triple total n=" + std::to_string(n);
    }
  }
  for (int n = 1; n <= 8 && ok; ++n) {
    Rational total = 0;
    for (int a = 1; a <= n + 1; ++a)
      for (int b = 1; b <= n + 1; ++b)
        for (int c = 1; c <= n + 1; ++c) {
          DistanceTriple d{a, b, c};
          if (d.valid()) total += g_three(d, n)[n];
        }
    Rational want = 1;
    for (int k = 0; k < n; ++k) want *= 3;
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), 2 * static_cast<unsigned>(n), static_cast<unsigned>(n));
    want = want * Rational(bin) / 2;
    if (total != want) {
      ok = false;
      bad = "series triple total n=" + std::to_string(n);
    }
  }
  double dt = now_minus(t0);
  report(2, "enumeration oracle vs series",
         ok && dt < 600.0,
         ok ? "pairs and triples exact for n <= 4, totals exact for n <= 8" : bad, dt);
}

// ---- criterion 3: bijection round trips ----

std::vector<int64_t> annotated_key(const PlanarMap& m, const std::vector<int>& ann) {
  std::vector<int64_t> best, cand;
  for (int root = 0; root < m.half_edge_count(); ++root) {
    cand = canonical_code(m, root, &ann);
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  int single_ok = 0, triple_ok = 0, tracked_ok = 0, aligned_ok = 0;
  const int n_single = 5000, n_triple = 5000, n_tracked = 10000, n_aligned = 2000;
  bool backbone_ok = true, constraints_ok = true;
  std::string bad;

  for (int k = 0; k < n_single; ++k) {
    int n = 2 + static_cast<int>(rng() % 49);
    PointedQuadrangulation pq = sample_pointed_quadrangulation(n, rng());
    ForwardResult fwd = forward_bijection(pq);
    InverseResult inv = inverse_bijection(fwd.labeled);
    std::vector<int> a(pq.map.vertex_count(), 0), b(inv.pointed.map.vertex_count(), 0);
    a[pq.sources[0]] = 1;
    b[inv.pointed.sources[0]] = 1;
    if (annotated_key(pq.map, a) == annotated_key(inv.pointed.map, b)) ++single_ok;
  }

  auto random_triple = [&](int n, PointedQuadrangulation& out, DistanceTriple& d) {
    while (true) {
      PointedQuadrangulation pq = sample_pointed_quadrangulation(n, rng());
      int nv = pq.map.vertex_count();
      int v1 = static_cast<int>(rng() % nv), v2 = static_cast<int>(rng() % nv),
          v3 = static_cast<int>(rng() % nv);
      if (v1 == v2 || v2 == v3 || v1 == v3) continue;
      auto d1 = bfs_distances(pq.map, v1);
      auto d2 = bfs_distances(pq.map, v2);
      d = DistanceTriple{d1[v2], d2[v3], d1[v3]};
      if (d.aligned()) continue;
      out = PointedQuadrangulation{pq.map, {v1, v2, v3}, delays_for_triple(d)};
      return;
    }
  };

  for (int k = 0; k < n_triple + n_tracked; ++k) {
    int n = 3 + static_cast<int>(rng() % 48);
    PointedQuadrangulation triple{PlanarMap({1, 0}, {0, 1}), {}, {}};
    DistanceTriple d{};
    random_triple(n, triple, d);
    int s, t, u;
    d.stu(s, t, u);
    ForwardResult fwd = forward_bijection(triple);
    TripleConstraintReport rep = verify_triple_constraints(fwd.labeled, s, t, u);
    if (!rep.ok()) {
      constraints_ok = false;
      if (bad.empty()) bad = "constraint failure, n=" + std::to_string(n);
    }
    if (rep.backbone_type == BackboneType::e || rep.backbone_type == BackboneType::f ||
        rep.backbone_type == BackboneType::g) {
      backbone_ok = false;
      if (bad.empty()) bad = "backbone type " + to_string(rep.backbone_type);
    }
    InverseResult inv = inverse_bijection(fwd.labeled);
    auto& q = inv.pointed;
    auto e1 = bfs_distances(q.map, q.sources[0]);
    auto e2 = bfs_distances(q.map, q.sources[1]);
    bool tracked = e1[q.sources[1]] == d.d12 && e2[q.sources[2]] == d.d23 &&
                   e1[q.sources[2]] == d.d31;
    if (k < n_triple) {
      std::vector<int> a(triple.map.vertex_count(), 0), b(q.map.vertex_count(), 0);
      for (int i = 0; i < 3; ++i) {
        a[triple.sources[i]] = i + 1;
        b[q.sources[i]] = i + 1;
      }
      if (tracked && annotated_key(triple.map, a) == annotated_key(q.map, b)) ++triple_ok;
    } else if (tracked) {
      ++tracked_ok;
    }
  }

  // aligned triples: two sources plus a marked geodesic vertex
  for (int k = 0; k < n_aligned; ++k) {
    int n = 3 + static_cast<int>(rng() % 48);
    PointedQuadrangulation pq = sample_pointed_quadrangulation(n, rng());
    int nv = pq.map.vertex_count();
    int v1 = static_cast<int>(rng() % nv), v2 = static_cast<int>(rng() % nv);
    if (v1 == v2) {
      --k;
      continue;
    }
    auto d1 = bfs_distances(pq.map, v1);
    auto d2 = bfs_distances(pq.map, v2);
    int d12 = d1[v2];
    int v3 = -1;
    for (int v = 0; v < nv; ++v)
      if (v != v1 && v != v2 && d1[v] + d2[v] == d12) {
        v3 = v;
        break;
      }
    if (v3 < 0) {
      --k;
      continue;
    }
    int s = d1[v3], t = d2[v3];
    PointedQuadrangulation two{pq.map, {v1, v2}, {-s, -t}};
    ForwardResult fwd = forward_bijection(two);
    AlignedConstraintReport rep =
        verify_aligned_constraints(fwd.labeled, s, t, fwd.vertex_image[v3]);
    if (rep.ok()) ++aligned_ok;
  }

  bool ok = single_ok == n_single && triple_ok == n_triple && tracked_ok == n_tracked &&
            aligned_ok == n_aligned && backbone_ok && constraints_ok;
  std::ostringstream det;
  if (ok)
    det << (n_single + n_triple) << " round trips, " << n_tracked
        << " tracked triples, " << n_aligned << " aligned images, zero failures";
  else
    det << "round trips " << single_ok << "/" << n_single << " + " << triple_ok << "/"
        << n_triple << ", tracked " << tracked_ok << "/" << n_tracked << ", aligned "
        << aligned_ok << "/" << n_aligned << (bad.empty() ? "" : "; " + bad);
  report(3, "bijection round trip", ok, det.str(), now_minus(t0));
}

// ---- criterion 4: continuum normalizations ----

void criterion_4() {
  auto t0 = std::chrono::steady_clock::now();
  ScalingEval ev;
  std::ostringstream det;
  bool ok = true;
  auto require = [&](const char* what, double got, double want, double tol) {
    double err = std::abs(got - want);
    if (err > tol) {
      ok = false;
      det << " " << what << "=" << got << " (want " << want << " +- " << tol << ");";
    }
  };

  require("Phi2(40)", ev.phi2(40.0), 1.0, 1e-6);
  QuadratureRule rd = gauss_legendre(400, 0.0, 20.0);
  require("int_rho2", rd.integrate([&](double D) { return ev.rho2(D); }), 1.0, 1e-4);

  {
    QuadratureRule r3 = gauss_legendre(40, 0.0, 8.0);
    double acc = 0;
    for (size_t i = 0; i < r3.nodes.size(); ++i)
      for (size_t j = 0; j < r3.nodes.size(); ++j)
        for (size_t k = 0; k < r3.nodes.size(); ++k) {
          double S = r3.nodes[i], T = r3.nodes[j], U = r3.nodes[k];
          acc += r3.weights[i] * r3.weights[j] * r3.weights[k] * 2.0 *
                 ev.rho3(S + T, T + U, U + S);
        }
    require("int_rho3", acc, 1.0, 5e-3);
  }

  for (double D12 : {0.8, 1.5, 3.0}) {
    QuadratureRule rs = gauss_legendre(48, 0.0, D12);
    QuadratureRule ru = gauss_legendre(64, 0.0, 12.0);
    double acc = 0;
    for (size_t i = 0; i < rs.nodes.size(); ++i)
      for (size_t j = 0; j < ru.nodes.size(); ++j) {
        double S = rs.nodes[i], U = ru.nodes[j];
        acc += rs.weights[i] * ru.weights[j] * 2.0 * ev.rho3(D12, (D12 - S) + U, S + U);
      }
    double want = ev.rho2(D12);
    require("marginal_rho3", acc / want, 1.0, 1e-3);
  }

  {
    // grand-canonical marginal vs its closed form at a fixed real parameter
    Complex a(1.2247448713915890, 0.0);
    for (double D12 : {1.0, 3.0}) {
      QuadratureRule rs = gauss_legendre(80, 0.0, D12);
      QuadratureRule ru = gauss_legendre(120, 0.0, 15.0);
      double acc = 0;
      for (size_t i = 0; i < rs.nodes.size(); ++i)
        for (size_t j = 0; j < ru.nodes.size(); ++j) {
          double S = rs.nodes[i], U = ru.nodes[j];
          acc += rs.weights[i] * ru.weights[j] * 2.0 *
                 std::real(scaling_three_G(S, D12 - S, U, a));
        }
      require("marginal_closed", acc, std::real(scaling_marginal_closed(D12, a)), 1e-6);
    }
  }

  require("rho2_cubic", ev.rho2(0.05) / (0.05 * 0.05 * 0.05) / (3.0 / 7.0), 1.0, 0.02);

  {
    Complex ax = alpha_of_xi(1.3);
    Complex g3 = scaling_three_G(0.7, 1.1, 0.9, ax);
    Complex g3f = scaling_three_G_fd(0.7, 1.1, 0.9, ax, 1e-3);
    require("fd_third", std::abs((g3 - g3f) / g3), 0.0, 1e-4);
    Complex g2 = scaling_two_G(1.3, ax);
    Complex g2f = scaling_two_G_fd(1.3, ax, 1e-5);
    require("fd_first", std::abs((g2 - g2f) / g2), 0.0, 1e-6);
  }

  double dt = now_minus(t0);
  report(4, "continuum normalizations", ok && dt < 300.0,
         ok ? "all normalizations and derivative guards within tolerance" : det.str(), dt);
}

// ---- criterion 5: limiting regimes ----

void criterion_5() {
  auto t0 = std::chrono::steady_clock::now();
  ScalingEval ev;
  std::ostringstream det;
  bool ok = true;
  auto require = [&](const char* what, double got, double tol) {
    if (std::abs(got - 1.0) > tol) {
      ok = false;
      det << " " << what << " ratio=" << got << " (tol " << tol << ");";
    }
  };

  {
    // small-separation factorization into the merged-pair density times the
    // transverse profile, at D12 = 0.05, (U, omega) = (1.0, 0.3)
    double D12 = 0.05, U = 1.0, om = 0.3;
    double D31 = U + (1 + om) * D12 / 2, D23 = U + (1 - om) * D12 / 2;
    double lhs = ev.rho_cond(D23, D31, D12);
    double rhs = ev.rho2(U) * psi_transverse(om) / D12;
    require("small_D12", lhs / rhs, 0.03);
  }

  {
    // large-separation ridge at D12 = 10: longitudinal profile at nu = 0.5,
    // checked at three positions along the geodesic (transverse uniformity)
    double D12 = 10.0, nu = 0.5;
    double scale = std::pow(9.0 * D12, 1.0 / 3.0);
    for (double S : {2.0, 5.0, 8.0}) {
      double U = nu / scale;
      double lhs = ev.rho_cond((D12 - S) + U, S + U, D12);
      double rhs = scale / (2.0 * D12) * phi_longitudinal(nu);
      require("large_D12", lhs / rhs, 0.05);
    }
  }

  {
    // homogeneity degree of the small-radii law, fitted over a factor of 2
    for (double lam : {0.01, 0.02}) {
      double S = 1.1 * lam, T = 0.8 * lam, U = 1.3 * lam;
      double deg = std::log2(ev.phi3(2 * S, 2 * T, 2 * U) / ev.phi3(S, T, U));
      if (std::abs(deg - 8.0) > 0.05) {
        ok = false;
        det << " homogeneity degree=" << deg << ";";
      }
    }
  }

  require("tail", ev.rho3(4.2, 4.0, 3.8) / rho3_tail(12.0), 0.05);

  double dt = now_minus(t0);
  report(5, "limiting regimes", ok,
         ok ? "small/large separation, homogeneity, tail within tolerance" : det.str(), dt);
}

// ---- criterion 6: geodesic statistics ----

void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream det;

  for (long s = 1; s <= 3 && ok; ++s)
    for (long t = s; t <= 3; ++t)
      if (p_geodesic_sum(s, t) != 1 || p_geodesic_mean(s, t) != geodesic_profile(s, s + t)) {
        ok = false;
        det << " p_geodesic at s=" << s << " t=" << t << ";";
        break;
      }

  for (long s = 1; s <= 4 && ok; ++s) {
    Rational sum = 0;
    for (long c = 1; c <= 400; ++c) sum += p_inf(c, s);
    Rational tail = 1 - sum;
    if (tail < 0 || tail > Rational(1, 1000000000) || p_inf_mean(s) != avg_geodesic_inf(s)) {
      ok = false;
      det << " p_inf at s=" << s << ";";
    }
  }

  {
    Rational sum = 0, mean = 0;
    for (long c = 1; c <= 400; ++c) {
      sum += p_inf_far(c);
      mean += c * p_inf_far(c);
    }
    if (1 - sum > Rational(1, 1000000000) || abs(mean - 3) > Rational(1, 1000000)) {
      ok = false;
      det << " p_inf_far;";
    }
  }

  // large-t asymptotics of the local pair weight, checked where the
  // next-order correction is still below the stated tolerance
  for (long s : {1L, 2L}) {
    long t = 10000;
    Rational dd = f_local_uzero(s, t) - f_local_uzero(s - 1, t) - f_local_uzero(s, t - 1) +
                  f_local_uzero(s - 1, t - 1);
    double asy = (9.0 / 7.0) * static_cast<double>(s * (5 + s)) /
                 static_cast<double>((3 + s) * (2 + s)) * static_cast<double>(t) *
                 static_cast<double>(t) * static_cast<double>(t);
    double ratio = dd.get_d() / asy;
    if (std::abs(ratio - 1.0) > 1e-3) {
      ok = false;
      det << " large-t ratio=" << ratio << " at s=" << s << ";";
    }
  }

  report(6, "geodesic statistics", ok,
         ok ? "exact sums and means, far law mean 3, large-t within 1e-3" : det.str(),
         now_minus(t0));
}

// ---- criterion 7: Monte Carlo ----

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream det;
  bool ok = true;

  {
    ScalingEval ev;
    auto sample = empirical_two_point(16384, 100000, 424242);
    double ks = ks_distance(sample, [&](double x) { return x <= 0 ? 0.0 : ev.phi2(x); });
    det << "KS=" << ks;
    if (ks >= 0.02) ok = false;
  }

  for (long s : {1L, 2L}) {
    GeodesicCountStats st = empirical_geodesic_counts(static_cast<int>(s), 30, 30000, 65000,
                                                      777 + static_cast<uint64_t>(s));
    double tv = st.tv_distance([&](int c) { return p_inf(c, s).get_d(); });
    det << " TV(s=" << s << ")=" << tv;
    if (tv >= 0.02) ok = false;
  }

  for (int n = 1; n <= 3; ++n) {
    auto oracle = oracle_pointed_class_counts(n);
    int64_t samples = 1000000;
    auto seen = sample_pointed_class_counts(n, samples, 5150 + static_cast<uint64_t>(n));
    double oracle_total = 0;
    for (auto& [k, c] : oracle) oracle_total += static_cast<double>(c);
    double chi2 = 0;
    for (auto& [key, c] : oracle) {
      double expect = static_cast<double>(c) / oracle_total * static_cast<double>(samples);
      auto it = seen.find(key);
      double got = it == seen.end() ? 0.0 : static_cast<double>(it->second);
      chi2 += (got - expect) * (got - expect) / expect;
    }
    boost::math::chi_squared dist(static_cast<double>(oracle.size() - 1));
    double p = boost::math::cdf(boost::math::complement(dist, chi2));
    det << " chi2_p(n=" << n << ")=" << p;
    if (p <= 0.001) ok = false;
  }

  double dt = now_minus(t0);
  report(7, "Monte Carlo distribution checks", ok && dt < 900.0, det.str(), dt);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
