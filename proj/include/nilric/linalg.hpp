#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nilric/matrix.hpp"

namespace nilric {

// Inertia of a symmetric matrix / self-adjoint operator, in the order
// (negative, zero, positive).
struct SignatureTriple {
  int neg = 0;
  int zero = 0;
  int pos = 0;

  int total() const { return neg + zero + pos; }
  std::string str() const {
    return "(" + std::to_string(neg) + "," + std::to_string(zero) + "," + std::to_string(pos) + ")";
  }
  auto operator<=>(const SignatureTriple&) const = default;
};

// Reduced row echelon form in place; returns the pivot columns.
// Pivoting is deterministic: first nonzero entry scanning columns left to
// right, rows top to bottom, so equal row spaces give identical output.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

// Basis of the null space, columns in canonical (echelon) form.
RatMat kernel_basis(const RatMat& m);

std::optional<RatVec> solve(const RatMat& m, const RatVec& b);
std::optional<RatMat> inverse(const RatMat& m);
Rat determinant(RatMat m);

// A linear subspace of Q^n carried by a canonical column basis (the RREF of
// the row space, transposed), so equal subspaces compare equal memberwise.
struct Subspace {
  std::size_t ambient = 0;
  RatMat basis;  // ambient x dim, canonical

  std::size_t dim() const { return basis.cols(); }
  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace span(const std::vector<RatVec>& vectors, std::size_t ambient);
Subspace span_columns(const RatMat& columns);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
// Vectors of `u` orthogonal to all of `w` under the inner product with Gram
// matrix `gram`.
Subspace orthogonal_complement_in(const Subspace& u, const Subspace& w, const RatMat& gram);
Subspace full_space(std::size_t n);

// Exact inertia by symmetric congruence reduction: pick the lowest-index
// nonzero diagonal pivot and clear its row/column; when the remaining
// diagonal is all zero but some off-diagonal entry m_ij is not, add row/col j
// to row/col i (making the diagonal entry 2*m_ij) and continue. Sylvester's
// law makes the count basis-independent.
SignatureTriple inertia(const RatMat& symmetric);

struct SchurBlocks {
  RatMat Z, V, X, W, Y;
  RatMat R;  // X - V^t Z^-1 V - W Y^-1 W^t
  RatMat Q;  // congruence witness: Q^t M Q = blockdiag(Z, R, 0, Y)
};

// Splits a symmetric matrix with the block pattern
//   [ Z   V   0   0 ]
//   [ V^t X   0   W ]
//   [ 0   0   0   0 ]
//   [ 0   W^t 0   Y ]
// (blocks of sizes n1, n2, n3, n4) and returns the Schur reduction.
// Throws InternalError if the pattern is violated or Z or Y is singular.
SchurBlocks schur_reduce(const RatMat& m, std::size_t n1, std::size_t n2, std::size_t n3,
                         std::size_t n4);

}  // namespace nilric
