#include "nilric/signature.hpp"

namespace nilric {

CharacteristicSplitting characteristic_splitting(const LieAlgebra& a, const Metric& g) {
  std::size_t n = a.dim();
  Subspace killing = killing_subalgebra(a, g);
  Subspace derived = derived_ideal(a);
  Subspace derived_perp = orthogonal_complement_in(full_space(n), derived, g.gram());
  CharacteristicSplitting s;
  s.k_plus = intersect(killing, derived);
  s.k_minus = intersect(killing, derived_perp);
  s.o_plus = orthogonal_complement_in(derived, s.k_plus, g.gram());
  s.o_minus = orthogonal_complement_in(derived_perp, s.k_minus, g.gram());
  if (s.n1() + s.n2() + s.n3() + s.n4() != n)
    throw InternalError("characteristic splitting dimensions do not sum to n");
  RatMat basis(n, n);
  std::size_t c = 0;
  for (const Subspace* part : {&s.k_plus, &s.o_plus, &s.k_minus, &s.o_minus})
    for (std::size_t j = 0; j < part->dim(); ++j) basis.set_column(c++, part->basis.column(j));
  if (!inverse(basis)) throw InternalError("characteristic basis is not a basis");
  s.basis = std::move(basis);
  return s;
}

namespace {

ReducedRicci reduce_with_splitting(const RatMat& ric, const CharacteristicSplitting& s) {
  // Work with twice the form so reduced entries match the convention
  // R = diag(2 ric(x_i, x_i)) used for diagonal metrics on nice bases.
  RatMat m = s.basis.transpose() * ric * s.basis;
  m *= Rat(2);
  ReducedRicci out;
  out.n1 = s.n1();
  out.n2 = s.n2();
  out.n3 = s.n3();
  out.n4 = s.n4();
  out.blocks = schur_reduce(m, out.n1, out.n2, out.n3, out.n4);
  out.reduced_signature = inertia(out.blocks.R);
  // Corner blocks must be definite: Z positive, Y negative.
  SignatureTriple zs = inertia(out.blocks.Z);
  if (zs != SignatureTriple{0, 0, static_cast<int>(out.n1)})
    throw InternalError("Ricci form is not positive definite on K+");
  SignatureTriple ys = inertia(out.blocks.Y);
  if (ys != SignatureTriple{static_cast<int>(out.n4), 0, 0})
    throw InternalError("Ricci form is not negative definite on O-");
  return out;
}

}  // namespace

RicciSignatureResult ricci_signature(const LieAlgebra& a, const Metric& g) {
  RicciSignatureResult res;
  res.ric = ricci_via_trace_formula(a, g).ric;
  res.splitting = characteristic_splitting(a, g);
  res.reduced = reduce_with_splitting(res.ric, res.splitting);
  const SignatureTriple& m = res.reduced.reduced_signature;
  res.signature = SignatureTriple{static_cast<int>(res.reduced.n4) + m.neg,
                                  static_cast<int>(res.reduced.n3) + m.zero,
                                  static_cast<int>(res.reduced.n1) + m.pos};
  res.direct = inertia(res.ric);
  if (res.signature != res.direct)
    throw InternalError("reduced signature " + res.signature.str() +
                        " disagrees with direct inertia " + res.direct.str());
  return res;
}

ReducedRicci reduce_in_basis(const LieAlgebra& a, const Metric& g, const RatMat& p) {
  CharacteristicSplitting s = characteristic_splitting(a, g);
  std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw ValidationError("characteristic basis has wrong shape");
  if (!inverse(p)) throw ValidationError("characteristic basis is singular");
  // Verify the supplied columns respect the splitting block by block.
  std::size_t off = 0;
  for (const Subspace* part : {&s.k_plus, &s.o_plus, &s.k_minus, &s.o_minus}) {
    for (std::size_t j = 0; j < part->dim(); ++j)
      if (!part->contains(p.column(off + j)))
        throw ValidationError("supplied basis is not characteristic for this metric");
    off += part->dim();
  }
  CharacteristicSplitting custom = s;
  custom.basis = p;
  RatMat ric = ricci_via_trace_formula(a, g).ric;
  return reduce_with_splitting(ric, custom);
}

SignatureTriple signature_underestimate(const LieAlgebra& a, const Metric& g) {
  CharacteristicSplitting s = characteristic_splitting(a, g);
  return SignatureTriple{static_cast<int>(s.n4()), static_cast<int>(s.n3()),
                         static_cast<int>(s.n1())};
}

SignSet sign_set(const DimensionProfile& profile) {
  SignSet out;
  out.profile = profile;
  const auto [n, d, k, ell] = profile;
  std::size_t p_lo = k > d ? k - d : 0;
  std::size_t p_hi = k - ell;
  for (std::size_t p = p_lo; p <= p_hi; ++p)
    for (std::size_t mn = 0; mn <= d - ell; ++mn)
      for (std::size_t mz = 0; mz + mn <= d - ell; ++mz) {
        std::size_t mp = d - ell - mn - mz;
        out.triples.insert(SignatureTriple{static_cast<int>(n - d - p + mn),
                                           static_cast<int>(p + mz),
                                           static_cast<int>(ell + mp)});
      }
  return out;
}

MembershipReport check_membership(const LieAlgebra& a, const Metric& g) {
  if (!a.nilpotent())
    throw ValidationError("the admissible signature set is defined for nilpotent algebras only");
  MembershipReport rep;
  rep.profile = dimension_profile(a);
  RicciSignatureResult res = ricci_signature(a, g);
  rep.signature = res.signature;
  rep.p = res.reduced.n3;
  rep.m = res.reduced.reduced_signature;
  SignSet admissible = sign_set(rep.profile);
  rep.member = admissible.triples.count(res.signature) > 0;
  if (!rep.member)
    throw InternalError("computed signature " + res.signature.str() +
                        " falls outside the admissible set");
  return rep;
}

}  // namespace nilric
