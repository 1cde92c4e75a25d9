#pragma once

#include "quadmaps/gf_discrete.hpp"
#include "quadmaps/series.hpp"

namespace quadmaps {

// Fixed-distance statistics of infinitely large quadrangulations: average
// numbers of vertex couples at prescribed distances from a source, profiles
// of geodesic points between two sources, and the laws of the number of
// geodesic points. Everything here is an exact rational.

// symmetric kernel whose triple difference is the average couple count
Rational f_local(long s, long t, long u);
// the reduced closed form at u = 0 (equal to f_local(s,t,0))
Rational f_local_uzero(long s, long t);

// average number of vertices at distance d from a source, N_d
Rational n_vertices_at(long d);

// Delta_s Delta_t Delta_u f at the (s,t,u) of a distance triple
Rational couples_avg(const DistanceTriple& d);

// average number of geodesic points at distance s from the first of two
// sources at distance d apart, 1 <= s <= d-1
Rational geodesic_profile(long s, long d);
// its limit when the second source recedes, 3s(5+s)/((3+s)(2+s))
Rational avg_geodesic_inf(long s);

// chain weight A_{s,t} entering the geodesic-point law
Rational chain_weight(long s, long t);

// law of the number c of geodesic points at distance s from the first
// source, sources at distance s+t
Rational p_geodesic(long c, long s, long t);
// closed-form geometric sums: sum_c p (= 1) and sum_c c p (= the profile)
Rational p_geodesic_sum(long s, long t);
Rational p_geodesic_mean(long s, long t);

// the same law when the second source is far away, then far from both
Rational p_inf(long c, long s);
Rational p_inf_mean(long s);
Rational p_inf_far(long c);

// finite-size law from the g^n coefficients of the chain series; throws when
// distance s+t is unreachable at size n
Rational p_finite_n(int c, int s, int t, int n);

}  // namespace quadmaps
