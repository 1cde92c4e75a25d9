// Command-line front end: series coefficients, verification suites, continuum
// grids, Monte Carlo sampling and geodesic statistics. CSV goes to --out when
// given (written atomically via a temp file), stdout otherwise.

#include <quadmaps/bijection.hpp>
#include <quadmaps/continuum.hpp>
#include <quadmaps/enumerate.hpp>
#include <quadmaps/geodesic.hpp>
#include <quadmaps/gf_discrete.hpp>
#include <quadmaps/quadrature.hpp>
#include <quadmaps/sampler.hpp>

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace quadmaps;

namespace {

struct Timer {
  const char* what;
  bool enabled;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  ~Timer() {
    if (enabled)
      std::fprintf(stderr, "[profile] %s: %.3f s\n", what,
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
};

// 12 significant digits, the CSV float format everywhere
std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_out(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  std::filesystem::path target(out_path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw CLI::RuntimeError("cannot open " + tmp.string(), 1);
    f << content;
  }
  std::filesystem::rename(tmp, target);
}

int default_threads() {
  // accepted for forward compatibility of scripts; current code is serial
  if (const char* env = std::getenv("QUADMAPS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// ---- gf ----

int run_gf(const std::string& name, int order, int i, int s, int t, int u, int c,
           const std::string& d_csv, const std::string& out, bool profile) {
  Timer timer{"gf", profile};
  Series result(order);
  if (name == "r") {
    result = r_series(i, order);
  } else if (name == "two_point") {
    result = two_point(i, order);
  } else if (name == "x") {
    result = x_series(s, t, order);
  } else if (name == "y") {
    result = y_series(s, t, u, order);
  } else if (name == "f") {
    result = f_three(s, t, u, order);
  } else if (name == "g3") {
    int a, b, cc;
    if (std::sscanf(d_csv.c_str(), "%d,%d,%d", &a, &b, &cc) != 3)
      throw CLI::ValidationError("--d expects d12,d23,d31");
    result = g_three(DistanceTriple{a, b, cc}, order);
  } else if (name == "xc") {
    result = x_c(s, t, c, order);
  } else {
    throw CLI::ValidationError("unknown function '" + name +
                               "' (r, two_point, x, y, f, g3, xc)");
  }
  std::ostringstream csv;
  csv << "k,coefficient\n";
  for (int k = 0; k <= order; ++k) csv << k << "," << result[k].get_str() << "\n";
  write_out(out, csv.str());
  return 0;
}

// ---- verify ----

int verify_identities(int order, int max_stu, bool profile) {
  Timer timer{"identities", profile};
  for (const auto& chk : verify_identity_suite(max_stu, order)) {
    if (!chk.ok) {
      std::fprintf(stderr, "FAIL %s\n", chk.name.c_str());
      return 1;
    }
    std::printf("ok %s\n", chk.name.c_str());
  }
  return 0;
}

int verify_oracle(int oracle_n, bool profile) {
  Timer timer{"oracle", profile};
  for (int n = 1; n <= oracle_n; ++n) {
    for (auto& [d, w] : count_pairs(n))
      if (two_point(d, n)[n] != w) {
        std::fprintf(stderr, "FAIL pairs n=%d d=%d: enumerated %s, series %s\n", n, d,
                     w.get_str().c_str(), two_point(d, n)[n].get_str().c_str());
        return 1;
      }
    for (auto& [k, w] : count_triples(n)) {
      DistanceTriple d{k[0], k[1], k[2]};
      if (d.aligned()) continue;
      if (g_three(d, n)[n] != w) {
        std::fprintf(stderr, "FAIL triples n=%d d=(%d,%d,%d): enumerated %s, series %s\n",
                     n, k[0], k[1], k[2], w.get_str().c_str(),
                     g_three(d, n)[n].get_str().c_str());
        return 1;
      }
    }
    std::printf("ok oracle n=%d\n", n);
  }
  return 0;
}

int verify_bijection(int trips, uint64_t seed, bool profile) {
  Timer timer{"bijection", profile};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < trips; ++k) {
    int n = 3 + static_cast<int>(rng() % 28);
    PointedQuadrangulation pq = sample_pointed_quadrangulation(n, rng());
    int nv = pq.map.vertex_count();
    int v1 = static_cast<int>(rng() % nv), v2 = static_cast<int>(rng() % nv),
        v3 = static_cast<int>(rng() % nv);
    if (v1 == v2 || v2 == v3 || v1 == v3) {
      --k;
      continue;
    }
    auto d1 = bfs_distances(pq.map, v1);
    auto d2 = bfs_distances(pq.map, v2);
    DistanceTriple d{d1[v2], d2[v3], d1[v3]};
    if (d.aligned()) {
      --k;
      continue;
    }
    PointedQuadrangulation triple{pq.map, {v1, v2, v3}, delays_for_triple(d)};
    ForwardResult fwd = forward_bijection(triple);
    InverseResult inv = inverse_bijection(fwd.labeled);
    auto e1 = bfs_distances(inv.pointed.map, inv.pointed.sources[0]);
    auto e2 = bfs_distances(inv.pointed.map, inv.pointed.sources[1]);
    if (e1[inv.pointed.sources[1]] != d.d12 || e2[inv.pointed.sources[2]] != d.d23 ||
        e1[inv.pointed.sources[2]] != d.d31) {
      std::fprintf(stderr, "FAIL round trip at n=%d, triple (%d,%d,%d)\n", n, d.d12, d.d23,
                   d.d31);
      return 1;
    }
  }
  std::printf("ok bijection round trips (%d)\n", trips);
  return 0;
}

// ---- continuum ----

int run_continuum(const std::string& which, double dmax, double step, double d12,
                  const std::string& out, bool profile) {
  Timer timer{"continuum", profile};
  std::ostringstream csv;
  if (which == "rho2") {
    ScalingEval ev;
    csv << "D,rho2,Phi2\n";
    for (double D = step; D <= dmax + 1e-12; D += step)
      csv << fmt(D) << "," << fmt(ev.rho2(D)) << "," << fmt(ev.phi2(D)) << "\n";
  } else if (which == "rho3") {
    ScalingEval ev;
    csv << "D23,D31,rho3\n";
    for (double a = step; a <= dmax + 1e-12; a += step)
      for (double b = step; b <= dmax + 1e-12; b += step)
        csv << fmt(a) << "," << fmt(b) << "," << fmt(ev.rho3(d12, a, b)) << "\n";
  } else if (which == "rho_cond") {
    ScalingEval ev;
    csv << "D23,D31,rho_cond\n";
    for (double a = step; a <= dmax + 1e-12; a += step)
      for (double b = step; b <= dmax + 1e-12; b += step)
        csv << fmt(a) << "," << fmt(b) << "," << fmt(ev.rho_cond(a, b, d12)) << "\n";
  } else if (which == "psi") {
    csv << "omega,psi\n";
    for (double w = -1.0; w <= 1.0 + 1e-12; w += step)
      csv << fmt(w) << "," << fmt(psi_transverse(w)) << "\n";
  } else if (which == "phi") {
    csv << "nu,phi\n";
    for (double v = 0.0; v <= dmax + 1e-12; v += step)
      csv << fmt(v) << "," << fmt(phi_longitudinal(v)) << "\n";
  } else {
    throw CLI::ValidationError("unknown grid '" + which +
                               "' (rho2, rho3, rho_cond, psi, phi)");
  }
  write_out(out, csv.str());
  return 0;
}

// ---- sample ----

int run_sample(const std::string& which, int n, int samples, uint64_t seed, int s, int dmin,
               const std::string& out, bool profile) {
  Timer timer{"sample", profile};
  std::ostringstream csv;
  if (which == "two_point") {
    auto data = empirical_two_point(n, samples, seed);
    // histogram over the lattice atoms d / n^{1/4}
    double scale = std::pow(static_cast<double>(n), 0.25);
    std::map<int, int> hist;
    for (double x : data) ++hist[static_cast<int>(std::lround(x * scale))];
    csv << "d,D,count,frequency\n";
    for (auto& [d, cnt] : hist)
      csv << d << "," << fmt(d / scale) << "," << cnt << ","
          << fmt(static_cast<double>(cnt) / samples) << "\n";
  } else if (which == "three_point") {
    auto data = empirical_three_point(n, samples, seed);
    csv << "D12,D23,D31\n";
    for (auto& tpl : data)
      csv << fmt(tpl.d12) << "," << fmt(tpl.d23) << "," << fmt(tpl.d31) << "\n";
  } else if (which == "geodesic") {
    GeodesicCountStats st = empirical_geodesic_counts(s, dmin, n, samples, seed);
    csv << "c,count,frequency,p_inf\n";
    auto pmf = st.pmf();
    for (auto& [c, p] : pmf)
      csv << c << "," << st.counts.at(c) << "," << fmt(p) << ","
          << fmt(p_inf(c, s).get_d()) << "\n";
  } else if (which == "classes") {
    auto seen = sample_pointed_class_counts(n, samples, seed);
    auto oracle = oracle_pointed_class_counts(n);
    int64_t oracle_total = 0;
    for (auto& [k, c] : oracle) oracle_total += c;
    csv << "class,count,frequency,expected\n";
    int idx = 0;
    for (auto& [key, c] : oracle) {
      auto it = seen.find(key);
      int64_t got = it == seen.end() ? 0 : it->second;
      csv << idx++ << "," << got << "," << fmt(static_cast<double>(got) / samples) << ","
          << fmt(static_cast<double>(c) / static_cast<double>(oracle_total)) << "\n";
    }
  } else {
    throw CLI::ValidationError("unknown sampler '" + which +
                               "' (two_point, three_point, geodesic, classes)");
  }
  write_out(out, csv.str());
  return 0;
}

// ---- geodesic ----

int run_geodesic(const std::string& which, int s, int t, int dmax, int cmax,
                 const std::string& out, bool profile) {
  Timer timer{"geodesic", profile};
  std::ostringstream csv;
  if (which == "profile") {
    csv << "d,profile\n";
    for (int d = s + 1; d <= dmax; ++d)
      csv << d << "," << geodesic_profile(s, d).get_str() << "\n";
  } else if (which == "pmf") {
    csv << "c,p_geodesic\n";
    for (int c = 1; c <= cmax; ++c)
      csv << c << "," << p_geodesic(c, s, t).get_str() << "\n";
  } else if (which == "pmf_inf") {
    csv << "c,p_inf,p_inf_far\n";
    for (int c = 1; c <= cmax; ++c)
      csv << c << "," << p_inf(c, s).get_str() << "," << p_inf_far(c).get_str() << "\n";
  } else {
    throw CLI::ValidationError("unknown table '" + which + "' (profile, pmf, pmf_inf)");
  }
  write_out(out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two- and three-point distance statistics of random planar "
               "quadrangulations"};
  app.require_subcommand(1);
  bool profile = false;
  app.add_flag("--profile", profile, "print per-suite timings to stderr");
  (void)default_threads();

  // gf
  auto* gf = app.add_subcommand("gf", "print exact series coefficients as CSV");
  std::string gf_name, gf_d, gf_out;
  int gf_order = 10, gf_i = 1, gf_s = 1, gf_t = 1, gf_u = 1, gf_c = 1;
  gf->add_option("function", gf_name, "r, two_point, x, y, f, g3, xc")->required();
  gf->add_option("--order", gf_order, "truncation order N");
  gf->add_option("--i,--d-single", gf_i, "distance index for r / two_point");
  gf->add_option("--s", gf_s);
  gf->add_option("--t", gf_t);
  gf->add_option("--u", gf_u);
  gf->add_option("--c", gf_c, "chain point count for xc");
  gf->add_option("--d", gf_d, "d12,d23,d31 for g3");
  gf->add_option("--out", gf_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-checks; exit 1 on first failure");
  std::string verify_what = "all";
  int verify_order = 16, verify_stu = 4, verify_oracle_n = 3, verify_trips = 200;
  uint64_t verify_seed = 1;
  verify->add_option("suite", verify_what, "all, identities, oracle, bijection");
  verify->add_option("--order", verify_order);
  verify->add_option("--max-stu", verify_stu);
  verify->add_option("--oracle-n", verify_oracle_n)->check(CLI::Range(1, 4));
  verify->add_option("--trips", verify_trips, "bijection round trips");
  verify->add_option("--seed", verify_seed);

  // continuum
  auto* cont = app.add_subcommand("continuum", "scaling densities on a grid -> CSV");
  std::string cont_which, cont_out;
  double cont_dmax = 6.0, cont_step = 0.01, cont_d12 = 1.0;
  cont->add_option("grid", cont_which, "rho2, rho3, rho_cond, psi, phi")->required();
  cont->add_option("--dmax", cont_dmax);
  cont->add_option("--step", cont_step)->check(CLI::PositiveNumber);
  cont->add_option("--d12", cont_d12, "conditioning distance for rho3 / rho_cond");
  cont->add_option("--out", cont_out, "output file (default stdout)");

  // sample
  auto* sample = app.add_subcommand("sample", "Monte Carlo -> CSV");
  std::string sample_which, sample_out;
  int sample_n = 100000, sample_samples = 10000, sample_s = 1, sample_dmin = 30;
  uint64_t sample_seed = 1;
  sample->add_option("estimator", sample_which, "two_point, three_point, geodesic, classes")
      ->required();
  sample->add_option("--n", sample_n, "faces per map")->check(CLI::PositiveNumber);
  sample->add_option("--samples", sample_samples)->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed);
  sample->add_option("--s", sample_s, "geodesic: distance from the first source");
  sample->add_option("--dmin", sample_dmin, "geodesic: minimal source distance");
  sample->add_option("--out", sample_out, "output file (default stdout)");

  // geodesic
  auto* geo = app.add_subcommand("geodesic", "exact geodesic-point tables -> CSV");
  std::string geo_which, geo_out;
  int geo_s = 1, geo_t = 1, geo_dmax = 20, geo_cmax = 30;
  geo->add_option("table", geo_which, "profile, pmf, pmf_inf")->required();
  geo->add_option("--s", geo_s)->check(CLI::PositiveNumber);
  geo->add_option("--t", geo_t)->check(CLI::PositiveNumber);
  geo->add_option("--dmax", geo_dmax);
  geo->add_option("--cmax", geo_cmax);
  geo->add_option("--out", geo_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gf->parsed())
      return run_gf(gf_name, gf_order, gf_i, gf_s, gf_t, gf_u, gf_c, gf_d, gf_out, profile);
    if (verify->parsed()) {
      int rc = 0;
      if (verify_what == "all" || verify_what == "identities")
        rc = rc ? rc : verify_identities(verify_order, verify_stu, profile);
      if (verify_what == "all" || verify_what == "oracle")
        rc = rc ? rc : verify_oracle(verify_oracle_n, profile);
      if (verify_what == "all" || verify_what == "bijection")
        rc = rc ? rc : verify_bijection(verify_trips, verify_seed, profile);
      if (verify_what != "all" && verify_what != "identities" && verify_what != "oracle" &&
          verify_what != "bijection")
        throw CLI::ValidationError("unknown suite '" + verify_what + "'");
      return rc;
    }
    if (cont->parsed())
      return run_continuum(cont_which, cont_dmax, cont_step, cont_d12, cont_out, profile);
    if (sample->parsed())
      return run_sample(sample_which, sample_n, sample_samples, sample_seed, sample_s,
                        sample_dmin, sample_out, profile);
    if (geo->parsed())
      return run_geodesic(geo_which, geo_s, geo_t, geo_dmax, geo_cmax, geo_out, profile);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
