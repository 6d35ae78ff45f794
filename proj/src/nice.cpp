#include "nilric/nice.hpp"

#include <algorithm>

namespace nilric {

int quad_sign(const Quad& q) {
  int sa = sign(q.a), sb = sign(q.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2; sign follows the larger part.
  Rat lhs = q.a * q.a, rhs = 2 * q.b * q.b;
  if (lhs == rhs) return 0;  // cannot happen for nonzero rationals, kept for safety
  return lhs > rhs ? sa : sb;
}

NiceBasisReport is_nice_basis(const LieAlgebra& a, const RatMat& basis) {
  LieAlgebra re = a.rebased(basis);
  std::size_t n = re.dim();
  NiceBasisReport rep;
  // target k -> list of source pairs
  std::vector<std::vector<std::pair<int, int>>> sources(n);
  for (const auto& [pair, rhs] : re.stored_brackets()) {
    if (rhs.size() > 1) {
      rep.violation = "[f" + std::to_string(pair.first) + ",f" + std::to_string(pair.second) +
                      "] has " + std::to_string(rhs.size()) + " nonzero components";
      return rep;
    }
    sources[rhs.begin()->first - 1].push_back(pair);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& pairs = sources[k];
    for (std::size_t s = 0; s < pairs.size(); ++s)
      for (std::size_t t = s + 1; t < pairs.size(); ++t) {
        auto [i1, j1] = pairs[s];
        auto [i2, j2] = pairs[t];
        int shared = (i1 == i2 || i1 == j2) ? i1 : ((j1 == i2 || j1 == j2) ? j1 : 0);
        if (shared != 0) {
          rep.violation = "[f" + std::to_string(i1) + ",f" + std::to_string(j1) + "] and [f" +
                          std::to_string(i2) + ",f" + std::to_string(j2) +
                          "] both hit f" + std::to_string(k + 1) + " and share index " +
                          std::to_string(shared);
          return rep;
        }
      }
  }
  rep.is_nice = true;
  return rep;
}

namespace {

// Twice the diagonal Ricci entry at position m for the diagonal metric
// diag(x_1..x_n) on a nice basis, as a Laurent polynomial:
//   sum_{i<j} (C_ij^m)^2 x_m^2/(x_i x_j) - sum_{i,j} (C_im^j)^2 x_j/x_i.
MPoly diag_ricci_laurent(const LieAlgebra& re, std::size_t m) {
  std::size_t n = re.dim();
  MPoly p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat c = re.structure_constant(i, j, m);
      if (is_zero(c)) continue;
      MPoly::Expo e(n, 0);
      e[m] += 2;
      e[i] -= 1;
      e[j] -= 1;
      p.add_term(e, c * c);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat c = re.structure_constant(i, m, j);
      if (is_zero(c)) continue;
      MPoly::Expo e(n, 0);
      e[j] += 1;
      e[i] -= 1;
      p.add_term(e, -c * c);
    }
  return p;
}

}  // namespace

DiagSystem build_diag_system(const LieAlgebra& a, const RatMat& basis) {
  NiceBasisReport nice = is_nice_basis(a, basis);
  if (!nice.is_nice) throw ValidationError("basis is not nice: " + nice.violation);
  std::size_t n = a.dim();
  RatVec ones(n, Rat(1));
  Metric probe = Metric::from_diagonal_on_basis(ones, basis);
  CharacteristicSplitting split = characteristic_splitting(a, probe);
  // The ordered basis must walk the splitting block by block.
  std::size_t off = 0;
  for (const Subspace* part : {&split.k_plus, &split.o_plus, &split.k_minus, &split.o_minus}) {
    for (std::size_t j = 0; j < part->dim(); ++j)
      if (!part->contains(basis.column(off + j)))
        throw ValidationError("basis ordering does not follow the characteristic splitting");
    off += part->dim();
  }
  DiagSystem sys;
  sys.basis = basis;
  sys.n1 = split.n1();
  sys.n2 = split.n2();
  sys.n3 = split.n3();
  sys.n4 = split.n4();
  LieAlgebra re = a.rebased(basis);
  for (std::size_t m = sys.n1; m < sys.n1 + sys.n2; ++m) {
    MPoly laurent = diag_ricci_laurent(re, m);
    MPoly divisor = laurent.clear_denominators();
    sys.polys.push_back(std::move(laurent));
    sys.divisors.push_back(std::move(divisor));
    sys.own.push_back(m);
  }
  return sys;
}

DiagSystem diagonal_ricci_system(const LieAlgebra& a, const RatMat& basis) {
  if (!a.nilpotent()) throw ValidationError("diagonal Ricci systems require a nilpotent algebra");
  Subspace z = center(a);
  Subspace d = derived_ideal(a);
  if (!d.contains(z)) throw ValidationError("center is not contained in the derived ideal");
  std::size_t ell = z.dim(), dd = d.dim();
  std::vector<RatVec> lead, extended;
  for (std::size_t j = 0; j < ell; ++j) lead.push_back(basis.column(j));
  if (!(span(lead, a.dim()) == z))
    throw ValidationError("basis positions 1.." + std::to_string(ell) +
                          " must span the center");
  for (std::size_t j = 0; j < dd; ++j) extended.push_back(basis.column(j));
  if (!(span(extended, a.dim()) == d))
    throw ValidationError("basis positions 1.." + std::to_string(dd) +
                          " must span the derived ideal");
  return build_diag_system(a, basis);
}

NiceCheckReport check_nice_algebra(const DiagSystem& sys, const std::vector<Quad>& seed) {
  NiceCheckReport rep;
  if (seed.size() != sys.basis.rows()) throw ValidationError("seed length mismatch");
  rep.seed_positive = std::all_of(seed.begin(), seed.end(),
                                  [](const Quad& q) { return quad_sign(q) > 0; });
  if (!rep.seed_positive) throw ValidationError("seed entries must be strictly positive");
  rep.all_zero = true;
  for (const MPoly& f : sys.polys) {
    Quad v = f.eval<Quad>(seed);
    if (!v.is_zero()) rep.all_zero = false;
    rep.values.push_back(std::move(v));
  }
  // Jacobian in the own variables only, exact over Q(sqrt(2)).
  std::size_t k = sys.polys.size();
  std::vector<std::vector<Quad>> jac(k, std::vector<Quad>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      jac[r][c] = sys.polys[r].derivative(sys.own[c]).eval<Quad>(seed);
  // Gaussian elimination in the field Q(sqrt(2)).
  Quad det = Quad(Rat(1));
  bool singular = false;
  for (std::size_t col = 0; col < k && !singular; ++col) {
    std::size_t p = col;
    while (p < k && jac[p][col].is_zero()) ++p;
    if (p == k) {
      singular = true;
      break;
    }
    if (p != col) {
      std::swap(jac[p], jac[col]);
      det = -det;
    }
    det = det * jac[col][col];
    Quad inv = quad_inverse(jac[col][col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      if (jac[r][col].is_zero()) continue;
      Quad f = jac[r][col] * inv;
      for (std::size_t c = col; c < k; ++c) jac[r][c] -= f * jac[col][c];
    }
  }
  rep.jacobian_det = singular ? Quad() : det;
  rep.jacobian_regular = !singular && !rep.jacobian_det.is_zero();
  return rep;
}

NiceCheckReport check_nice_algebra(const DiagSystem& sys, const RatVec& seed) {
  std::vector<Quad> q(seed.begin(), seed.end());
  return check_nice_algebra(sys, q);
}

}  // namespace nilric
