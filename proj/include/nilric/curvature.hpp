#pragma once

#include <string>

#include "nilric/lie_algebra.hpp"
#include "nilric/metric.hpp"

namespace nilric {

// Adjoint of ad_u with respect to the metric: G^{-1} (ad_u)^t G.
RatMat adjoint_star(const LieAlgebra& a, const Metric& g, const RatVec& u);

// The skew-adjoint operator J_u : v -> ad_v^* u.
RatMat j_operator(const LieAlgebra& a, const Metric& g, const RatVec& u);

// Vector H with <H, u> = tr(ad_u) for every u. Zero on nilpotent algebras.
RatVec mean_curvature(const LieAlgebra& a, const Metric& g);

// Levi-Civita product L_u v from Koszul's formula
//   2<L_u v, w> = <[u,v],w> + <[w,u],v> + <[w,v],u>.
RatVec levi_civita(const LieAlgebra& a, const Metric& g, const RatVec& u, const RatVec& v);

struct RicciData {
  RatMat ric;          // symmetric matrix of ric(e_a, e_b)
  std::string method;  // "koszul-trace" or "trace-formula"
};

// ric(u,v) = tr(w -> K(u,w)v) with K(u,v) = L_[u,v] - [L_u, L_v].
// This route is the oracle for the production trace formula below.
RicciData ricci_via_curvature(const LieAlgebra& a, const Metric& g);

// ric(u,v) = -1/2 tr(ad_u ad_v) - 1/2 tr(ad_u ad_v^*) - 1/4 tr(J_u J_v)
//            - 1/2 <ad_H u, v> - 1/2 <ad_H v, u>.
// Valid on any Lie algebra; the mean-curvature terms vanish when nilpotent.
RicciData ricci_via_trace_formula(const LieAlgebra& a, const Metric& g);

// Left-invariant Killing fields: the kernel of u -> ad_u + ad_u^*.
// Equals the center for nilpotent algebras.
Subspace killing_subalgebra(const LieAlgebra& a, const Metric& g);

}  // namespace nilric
