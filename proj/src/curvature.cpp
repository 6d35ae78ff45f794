#include "nilric/curvature.hpp"

namespace nilric {

namespace {

std::vector<RatMat> all_ad_stars(const LieAlgebra& a, const Metric& g) {
  std::vector<RatMat> s;
  s.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    s.push_back(g.gram_inverse() * a.ad_basis(i).transpose() * g.gram());
  return s;
}

// L_{e_a} as a matrix, columns solved from Koszul's formula against 2G.
std::vector<RatMat> levi_civita_operators(const LieAlgebra& a, const Metric& g) {
  std::size_t n = a.dim();
  const RatMat& gram = g.gram();
  std::vector<RatMat> ops(n, RatMat(n, n));
  RatMat two_g = gram;
  two_g *= Rat(2);
  for (std::size_t ai = 0; ai < n; ++ai) {
    RatVec u(n, Rat(0));
    u[ai] = 1;
    for (std::size_t bi = 0; bi < n; ++bi) {
      RatVec v(n, Rat(0));
      v[bi] = 1;
      RatVec rhs(n, Rat(0));
      RatVec br_uv = a.bracket(u, v);
      for (std::size_t wi = 0; wi < n; ++wi) {
        RatVec w(n, Rat(0));
        w[wi] = 1;
        rhs[wi] = dot(br_uv, gram * w) + dot(a.bracket(w, u), gram * v) +
                  dot(a.bracket(w, v), gram * u);
      }
      ops[ai].set_column(bi, *solve(two_g, rhs));
    }
  }
  return ops;
}

}  // namespace

RatMat adjoint_star(const LieAlgebra& a, const Metric& g, const RatVec& u) {
  if (u.size() != a.dim() || g.dim() != a.dim())
    throw ValidationError("dimension mismatch in adjoint_star");
  return g.gram_inverse() * a.ad(u).transpose() * g.gram();
}

RatMat j_operator(const LieAlgebra& a, const Metric& g, const RatVec& u) {
  if (u.size() != a.dim() || g.dim() != a.dim())
    throw ValidationError("dimension mismatch in j_operator");
  std::size_t n = a.dim();
  RatMat j(n, n);
  std::vector<RatMat> stars = all_ad_stars(a, g);
  for (std::size_t b = 0; b < n; ++b) j.set_column(b, stars[b] * u);
  return j;
}

RatVec mean_curvature(const LieAlgebra& a, const Metric& g) {
  std::size_t n = a.dim();
  RatVec traces(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rat t(0);
    RatMat ad = a.ad_basis(i);
    for (std::size_t k = 0; k < n; ++k) t += ad(k, k);
    traces[i] = t;
  }
  return *solve(g.gram(), traces);
}

RatVec levi_civita(const LieAlgebra& a, const Metric& g, const RatVec& u, const RatVec& v) {
  std::size_t n = a.dim();
  if (u.size() != n || v.size() != n) throw ValidationError("dimension mismatch in levi_civita");
  const RatMat& gram = g.gram();
  RatVec rhs(n, Rat(0));
  RatVec br_uv = a.bracket(u, v);
  for (std::size_t wi = 0; wi < n; ++wi) {
    RatVec w(n, Rat(0));
    w[wi] = 1;
    rhs[wi] =
        dot(br_uv, gram * w) + dot(a.bracket(w, u), gram * v) + dot(a.bracket(w, v), gram * u);
  }
  RatMat two_g = gram;
  two_g *= Rat(2);
  return *solve(two_g, rhs);
}

RicciData ricci_via_curvature(const LieAlgebra& a, const Metric& g) {
  std::size_t n = a.dim();
  std::vector<RatMat> lc = levi_civita_operators(a, g);
  RatMat ric(n, n);
  // Every entry is assembled independently; symmetry of the result is a
  // checked consequence, not an assumption.
  for (std::size_t ai = 0; ai < n; ++ai) {
    RatVec u(n, Rat(0));
    u[ai] = 1;
    for (std::size_t bi = 0; bi < n; ++bi) {
      // trace over w of K(e_a, w) e_b with K(u,w) = L_[u,w] - [L_u, L_w]
      Rat t(0);
      for (std::size_t wi = 0; wi < n; ++wi) {
        RatVec w(n, Rat(0));
        w[wi] = 1;
        RatVec l_br = a.bracket(u, w);
        RatVec term(n, Rat(0));
        for (std::size_t c = 0; c < n; ++c)
          if (!is_zero(l_br[c])) {
            RatVec col = lc[c].column(bi);
            for (std::size_t r = 0; r < n; ++r) term[r] += l_br[c] * col[r];
          }
        RatVec t1 = lc[ai] * lc[wi].column(bi);
        RatVec t2 = lc[wi] * lc[ai].column(bi);
        t += term[wi] - t1[wi] + t2[wi];
      }
      ric(ai, bi) = t;
    }
  }
  return RicciData{std::move(ric), "koszul-trace"};
}

RicciData ricci_via_trace_formula(const LieAlgebra& a, const Metric& g) {
  std::size_t n = a.dim();
  std::vector<RatMat> stars = all_ad_stars(a, g);
  std::vector<RatMat> js(n, RatMat(n, n));
  for (std::size_t ai = 0; ai < n; ++ai) {
    RatVec u(n, Rat(0));
    u[ai] = 1;
    for (std::size_t b = 0; b < n; ++b) js[ai].set_column(b, stars[b] * u);
  }
  RatVec h = mean_curvature(a, g);
  RatMat g_ad_h = g.gram() * a.ad(h);
  RatMat ric(n, n);
  Rat half(1, 2), quarter(1, 4);
  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t bi = ai; bi < n; ++bi) {
      Rat val = -half * trace_of_product(a.ad_basis(ai), a.ad_basis(bi)) -
                half * trace_of_product(a.ad_basis(ai), stars[bi]) -
                quarter * trace_of_product(js[ai], js[bi]) - half * g_ad_h(bi, ai) -
                half * g_ad_h(ai, bi);
      ric(ai, bi) = val;
      ric(bi, ai) = val;
    }
  return RicciData{std::move(ric), "trace-formula"};
}

Subspace killing_subalgebra(const LieAlgebra& a, const Metric& g) {
  std::size_t n = a.dim();
  std::vector<RatMat> stars = all_ad_stars(a, g);
  RatMat sys(n * n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RatMat s = a.ad_basis(c) + stars[c];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys(i * n + j, c) = s(i, j);
  }
  return span_columns(kernel_basis(sys));
}

}  // namespace nilric
