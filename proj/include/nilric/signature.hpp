#pragma once

#include <set>
#include <string>

#include "nilric/curvature.hpp"

namespace nilric {

// g = K+ (+) O+ (+) K- (+) O- where K+/K- are the Killing fields inside the
// derived ideal and its orthogonal complement, and O+/O- the orthogonal
// complements therein. The attached basis is rational, never orthonormalized.
struct CharacteristicSplitting {
  Subspace k_plus, o_plus, k_minus, o_minus;
  RatMat basis;  // columns: K+ basis, O+ basis, K- basis, O- basis

  std::size_t n1() const { return k_plus.dim(); }
  std::size_t n2() const { return o_plus.dim(); }
  std::size_t n3() const { return k_minus.dim(); }
  std::size_t n4() const { return o_minus.dim(); }
};

CharacteristicSplitting characteristic_splitting(const LieAlgebra& a, const Metric& g);

// Block data of twice the Ricci form in a characteristic basis, plus the
// Schur reduction R = X - V^t Z^-1 V - W Y^-1 W^t and its inertia.
struct ReducedRicci {
  SchurBlocks blocks;
  SignatureTriple reduced_signature;
  std::size_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
};

struct RicciSignatureResult {
  SignatureTriple signature;  // (n4 + m-, n3 + m0, n1 + m+)
  SignatureTriple direct;     // inertia of the full Ricci form, must agree
  ReducedRicci reduced;
  CharacteristicSplitting splitting;
  RatMat ric;  // the Ricci form itself (standard basis)
};

// Full pipeline: Ricci form, characteristic basis, exact zero-block check,
// Schur reduction, signature assembled from the splitting dimensions, and an
// independent direct inertia of the form. Disagreement raises InternalError.
RicciSignatureResult ricci_signature(const LieAlgebra& a, const Metric& g);

// Same reduction but in a caller-supplied characteristic basis (columns of
// p). The basis is verified block-by-block against the splitting; reduced
// matrix entries depend on this choice even though the signature does not.
ReducedRicci reduce_in_basis(const LieAlgebra& a, const Metric& g, const RatMat& p);

// (dim [g,g]^perp - dim K-, dim K-, dim K+).
SignatureTriple signature_underestimate(const LieAlgebra& a, const Metric& g);

struct SignSet {
  DimensionProfile profile;
  std::set<SignatureTriple> triples;
};

// All (n-d-p+m-, p+m0, l+m+) with max(k-d,0) <= p <= k-l and
// m- + m0 + m+ = d - l.
SignSet sign_set(const DimensionProfile& profile);

struct MembershipReport {
  bool member = false;
  SignatureTriple signature;
  std::size_t p = 0;              // witnessing dim K-
  SignatureTriple m;              // witnessing reduced signature
  DimensionProfile profile{};
};

// Checks the computed signature against the admissible set of the algebra's
// profile. Nilpotent input only. Non-membership raises InternalError.
MembershipReport check_membership(const LieAlgebra& a, const Metric& g);

}  // namespace nilric
