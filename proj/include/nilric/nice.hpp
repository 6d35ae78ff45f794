#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilric/polynomial.hpp"
#include "nilric/signature.hpp"

namespace nilric {

struct NiceBasisReport {
  bool is_nice = false;
  // Witness when not nice: either a bracket with two targets, or two
  // brackets sharing a source index while hitting the same target.
  std::string violation;
};

// Checks the two nice-basis conditions on the structure constants rewritten
// in the given basis (columns of `basis`): every bracket of two basis
// vectors is a multiple of a single basis vector, and brackets hitting the
// same target have disjoint source pairs.
NiceBasisReport is_nice_basis(const LieAlgebra& a, const RatMat& basis);

// Diagonal-metric Ricci data on an ordered basis: with x_i = <f_i, f_i>,
// twice the m-th diagonal Ricci entry equals polys[j] / divisors[j] where
// m = own[j]. Valid when the basis is nice, which makes the Ricci form
// diagonal for every diagonal metric.
struct DiagSystem {
  RatMat basis;                 // ordered basis, columns
  std::size_t n1, n2, n3, n4;   // characteristic splitting sizes, diag metrics
  std::vector<MPoly> polys;     // F_1..F_{n2}, homogeneous
  std::vector<MPoly> divisors;  // monomial divisor per entry
  std::vector<std::size_t> own; // 0-based basis position of each F's square term
};

// Builds the system for any ordered nice basis whose blocks follow the
// characteristic splitting (checked). The polynomials are the entries of the
// reduced matrix; positions outside K+ contribute one polynomial each.
DiagSystem build_diag_system(const LieAlgebra& a, const RatMat& basis);

// The classical construction: requires a nice basis, Z(g) contained in
// [g,g], and the ordering (Z basis | rest of [g,g] | complement). Delegates
// to build_diag_system after verifying those preconditions exactly.
DiagSystem diagonal_ricci_system(const LieAlgebra& a, const RatMat& basis);

struct NiceCheckReport {
  bool seed_positive = false;
  bool all_zero = false;      // F_j(seed) = 0 for every j
  bool jacobian_regular = false;  // det DF != 0 in the own variables
  std::vector<Quad> values;   // F_j at the seed
  Quad jacobian_det;
  bool passes() const { return seed_positive && all_zero && jacobian_regular; }
};

// Certifies a seed for the inverse-function realization: exact zero of every
// F_j and exactly nonsingular Jacobian with respect to the own variables.
// Seeds live in Q(sqrt(2)) so published irrational seeds can be certified;
// rational seeds embed as Quad with zero irrational part.
NiceCheckReport check_nice_algebra(const DiagSystem& sys, const std::vector<Quad>& seed);
NiceCheckReport check_nice_algebra(const DiagSystem& sys, const RatVec& seed);

int quad_sign(const Quad& q);

}  // namespace nilric
