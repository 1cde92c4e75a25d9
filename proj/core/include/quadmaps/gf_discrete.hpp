#pragma once

#include <string>
#include <vector>

#include "quadmaps/series.hpp"

namespace quadmaps {

// Pairwise distances between three marked vertices of a quadrangulation.
// Valid triples satisfy the triangle inequality and have even perimeter
// (distances in a bipartite graph). "Aligned" means one vertex lies on a
// geodesic between the other two, i.e. one of s,t,u vanishes.
struct DistanceTriple {
  int d12 = 0;
  int d23 = 0;
  int d31 = 0;

  // s = (d12 - d23 + d31)/2, t = (d12 + d23 - d31)/2, u = (-d12 + d23 + d31)/2
  void stu(int& s, int& t, int& u) const;
  bool valid() const;
  bool aligned() const;
};

enum class RMethod { closed, recursive };
enum class XMethod { closed, recursive, path_sum };
enum class YMethod { closed, recursive, sum_form };
enum class FMethod { closed, product };

// Generating function R_i of quadrangulations with a boundary geodesic at
// distance <= i from the marked vertex. R_0 = 0, R_i -> R as i -> infinity.
// closed:    R_i = R [i][i+3] / ([i+1][i+2])
// recursive: R_i = 1 / (1 - g (R_{i-1} + R_i + R_{i+1})), solved order by order
Series r_series(int i, int order, RMethod method = RMethod::closed);

// Distance-two-point function: G(i) = log(R_i / R_{i-1}) for i >= 2,
// G(1) = log R_1. Coefficient of g^n is the symmetry-weighted count of
// pointed quadrangulations with n faces and a second marked vertex at
// distance exactly i.
Series two_point(int i, int order);

// X_{s,t}: generating function of label-decorated chains ("spines") with
// Motzkin-path heights weighted by R_{l+s} R_{l+t}.
// X_{s,0} = X_{0,t} = 1; for s,t >= order+1 it equals 1 + x + x^2.
Series x_series(int s, int t, int order, XMethod method = XMethod::closed);

// Y_{s,t,u} = [s+3][t+3][u+3][s+t+u+3] / ([3][s+t+3][t+u+3][u+s+3]).
// Y_{s,t,0} = 1; symmetric in s,t,u.
Series y_series(int s, int t, int u, int order, YMethod method = YMethod::closed);

// F(s,t,u) = X_{s,t} X_{t,u} X_{u,s} Y_{s,t,u}^2. Guard clauses:
// returns 0 whenever an argument equals -1 (empty range convention).
Series f_three(int s, int t, int u, int order, FMethod method = FMethod::closed);

// Three-point function G(d12,d23,d31) = Delta_s Delta_t Delta_u F at the
// (s,t,u) of the triple. Degenerate conventions (e.g. G(d,d,0) = delta_{d,0})
// fall out of the F(.,.,-1) = 0 guard. Throws on invalid triples.
Series g_three(const DistanceTriple& d, int order);

// Checks F(s,t,u) == sum over the box {0..s}x{0..t}x{0..u} of
// G(s'+t', t'+u', u'+s').
bool f_inverse_sum_check(int s, int t, int u, int order);

// X^{(c)} = (1/c) ((X-1)/X)^c: chains whose label-0 slice has exactly c
// vertices, with the marking removed.
Series x_c(int s, int t, int c, int order);

// F(s,t,u,v): product of the six pair factors X and four triple factors Y.
Series four_point_restricted(int s, int t, int u, int v, int order);

struct IdentityCheck {
  std::string name;
  bool ok = false;
};

// Cross-validates every independent route (closed vs recursive vs path/sum
// forms, finite-difference identities, inversion, limits) for parameters up
// to p_max at truncation order `order`. All comparisons are exact.
std::vector<IdentityCheck> verify_identity_suite(int p_max, int order);

}  // namespace quadmaps
