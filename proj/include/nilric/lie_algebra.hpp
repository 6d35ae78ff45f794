#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nilric/linalg.hpp"

namespace nilric {

// A finite-dimensional Lie algebra given by rational structure constants
// C_ij^k on a fixed basis e_1..e_n. Only pairs i < j are stored; the bracket
// extends bilinearly with [e_j, e_i] = -[e_i, e_j].
class LieAlgebra {
 public:
  // brackets: one entry per stored pair (i, j) with 1 <= i < j <= n, mapping
  // target index k to the coefficient of e_k in [e_i, e_j].
  LieAlgebra(std::size_t dim, std::map<std::pair<int, int>, std::map<int, Rat>> brackets,
             std::vector<std::string> labels = {});

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;  // 0-based

  // C_ij^k for arbitrary i, j (antisymmetry applied), 0-based indices.
  Rat structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::map<std::pair<int, int>, std::map<int, Rat>>& stored_brackets() const {
    return brackets_;
  }

  RatVec bracket(const RatVec& u, const RatVec& v) const;
  // Matrix of ad_u : v -> [u, v].
  RatMat ad(const RatVec& u) const;
  RatMat ad_basis(std::size_t i) const;  // ad of e_i, 0-based

  bool nilpotent() const { return nilpotent_; }
  int nilpotency_class() const { return nilpotency_class_; }

  // Structure constants rewritten on the basis given by the columns of p.
  LieAlgebra rebased(const RatMat& p) const;

 private:
  std::size_t n_;
  std::map<std::pair<int, int>, std::map<int, Rat>> brackets_;
  std::vector<std::string> labels_;
  std::vector<RatMat> ad_;  // ad of each basis vector
  bool nilpotent_ = false;
  int nilpotency_class_ = 0;
};

LieAlgebra abelian_algebra(std::size_t n);

struct JacobiFailure {
  int i, j, k;      // 1-based basis triple
  RatVec residual;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct ValidityReport {
  bool jacobi_ok = true;
  std::optional<JacobiFailure> first_failure;
  bool nilpotent = false;
  int nilpotency_class = 0;  // meaningful when nilpotent
  std::size_t series_length = 0;
};

// Construction already verifies the Jacobi identity; this recomputes the
// facts in report form (used by the CLI and by tests on perturbed data).
ValidityReport validate(std::size_t dim,
                        const std::map<std::pair<int, int>, std::map<int, Rat>>& brackets);
ValidityReport validate(const LieAlgebra& a);

Subspace center(const LieAlgebra& a);
Subspace derived_ideal(const LieAlgebra& a);
// g^1 = [g,g], g^{m+1} = [g, g^m], listed until the first stabilized term.
std::vector<Subspace> lower_central_series(const LieAlgebra& a);

struct DimensionProfile {
  std::size_t n, d, k, ell;
  auto operator<=>(const DimensionProfile&) const = default;
};

// (n, dim[g,g], dim Z(g), dim(Z(g) meet [g,g])). Rejects non-nilpotent input.
DimensionProfile dimension_profile(const LieAlgebra& a);

// Raw constructor bypassing the i<j input discipline is not offered; parsing
// layers enforce it. Convenience builder used in tests and the catalog:
LieAlgebra algebra_from_simple_brackets(
    std::size_t dim, const std::vector<std::tuple<int, int, int, Rat>>& ijk_coeff);

}  // namespace nilric
