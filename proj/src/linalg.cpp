#include "nilric/linalg.hpp"

#include <algorithm>

namespace nilric {

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rat inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

RatMat kernel_basis(const RatMat& m) {
  RatMat r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> cols;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    cols.push_back(std::move(v));
  }
  // Canonicalize so kernels of row-equivalent matrices coincide.
  return span(cols, m.cols()).basis;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  if (m.rows() != b.size()) throw Error("shape mismatch in solve");
  RatMat aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  RatVec x(m.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  std::size_t n = m.rows();
  RatMat aug = m.hcat(RatMat::identity(n));
  std::vector<std::size_t> pivots = rref(aug);
  // Invertible iff every one of the first n columns carries a pivot;
  // otherwise the augmented half starts contributing pivot columns.
  if (n > 0 && (pivots.size() < n || pivots[n - 1] != n - 1)) return std::nullopt;
  return aug.block(0, n, n, n);
}

Rat determinant(RatMat m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  std::size_t n = m.rows();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(m(p, col))) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    Rat inv = 1 / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      Rat f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

bool Subspace::contains(const RatVec& v) const {
  if (vec_is_zero(v)) return true;
  RatMat aug = basis.hcat(RatMat::from_columns({v}, ambient));
  return rank(aug) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis.column(j))) return false;
  return true;
}

Subspace span(const std::vector<RatVec>& vectors, std::size_t ambient) {
  RatMat rows(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw Error("span vector length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = vectors[i][j];
  }
  std::vector<std::size_t> pivots = rref(rows);
  RatMat basis(ambient, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < ambient; ++j) basis(j, k) = rows(k, j);
  return Subspace{ambient, std::move(basis)};
}

Subspace span_columns(const RatMat& columns) {
  std::vector<RatVec> vs;
  for (std::size_t j = 0; j < columns.cols(); ++j) vs.push_back(columns.column(j));
  return span(vs, columns.rows());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient) throw Error("ambient mismatch in intersect");
  if (u.dim() == 0 || v.dim() == 0) return Subspace{u.ambient, RatMat(u.ambient, 0)};
  RatMat joint = u.basis.hcat(v.basis);
  RatMat ker = kernel_basis(joint);
  std::vector<RatVec> vs;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    RatVec coeff(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) coeff[i] = ker(i, j);
    vs.push_back(u.basis * coeff);
  }
  return span(vs, u.ambient);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  std::vector<RatVec> vs;
  for (std::size_t j = 0; j < u.dim(); ++j) vs.push_back(u.basis.column(j));
  for (std::size_t j = 0; j < v.dim(); ++j) vs.push_back(v.basis.column(j));
  return span(vs, u.ambient);
}

Subspace orthogonal_complement_in(const Subspace& u, const Subspace& w, const RatMat& gram) {
  if (w.dim() == 0) return u;
  // Solve (B_w^t G B_u) c = 0 and map back through B_u.
  RatMat sys = w.basis.transpose() * gram * u.basis;
  RatMat ker = kernel_basis(sys);
  std::vector<RatVec> vs;
  for (std::size_t j = 0; j < ker.cols(); ++j) vs.push_back(u.basis * ker.column(j));
  return span(vs, u.ambient);
}

Subspace full_space(std::size_t n) { return Subspace{n, RatMat::identity(n)}; }

SignatureTriple inertia(const RatMat& symmetric) {
  if (!symmetric.is_symmetric()) throw ValidationError("inertia requires a symmetric matrix");
  RatMat m = symmetric;
  std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  SignatureTriple sig;
  auto eliminate = [&](std::size_t piv) {
    Rat p = m(piv, piv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == piv || done[r] || is_zero(m(r, piv))) continue;
      Rat f = m(r, piv) / p;
      for (std::size_t c = 0; c < n; ++c) m(r, c) -= f * m(piv, c);
      for (std::size_t c = 0; c < n; ++c) m(c, r) -= f * m(c, piv);
    }
  };
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !is_zero(m(i, i))) {
        piv = i;
        break;
      }
    if (piv < n) {
      eliminate(piv);
      (sign(m(piv, piv)) > 0 ? sig.pos : sig.neg) += 1;
      done[piv] = true;
      continue;
    }
    // Remaining diagonal all zero: look for an off-diagonal entry.
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n && !found; ++j) {
        if (done[j] || is_zero(m(i, j))) continue;
        // Congruence add: row/col j into row/col i. With m_ii = m_jj = 0 the
        // new diagonal entry is 2*m_ij != 0.
        for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c);
        for (std::size_t c = 0; c < n; ++c) m(c, i) += m(c, j);
        found = true;
      }
    }
    if (!found) break;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!done[i]) sig.zero += 1;
  return sig;
}

SchurBlocks schur_reduce(const RatMat& m, std::size_t n1, std::size_t n2, std::size_t n3,
                         std::size_t n4) {
  std::size_t n = n1 + n2 + n3 + n4;
  if (m.rows() != n || m.cols() != n) throw Error("block sizes do not sum to matrix order");
  if (!m.is_symmetric()) throw ValidationError("schur_reduce requires a symmetric matrix");
  const std::size_t o2 = n1, o3 = n1 + n2, o4 = n1 + n2 + n3;
  if (!m.block(0, o3, n1, n3).is_zero() || !m.block(0, o4, n1, n4).is_zero() ||
      !m.block(o3, 0, n3, n).is_zero())
    throw InternalError("block pattern violation in schur_reduce");
  SchurBlocks out;
  out.Z = m.block(0, 0, n1, n1);
  out.V = m.block(0, o2, n1, n2);
  out.X = m.block(o2, o2, n2, n2);
  out.W = m.block(o2, o4, n2, n4);
  out.Y = m.block(o4, o4, n4, n4);
  std::optional<RatMat> zinv = inverse(out.Z);
  std::optional<RatMat> yinv = inverse(out.Y);
  if (!zinv || !yinv) throw InternalError("singular corner block in schur_reduce");
  out.R = out.X - out.V.transpose() * (*zinv) * out.V - out.W * (*yinv) * out.W.transpose();
  out.Q = RatMat::identity(n);
  if (n1 > 0 && n2 > 0) out.Q.set_block(0, o2, Rat(-1) * ((*zinv) * out.V));
  if (n4 > 0 && n2 > 0) out.Q.set_block(o4, o2, Rat(-1) * ((*yinv) * out.W.transpose()));
  // The witness must diagonalize the matrix exactly.
  RatMat check = out.Q.transpose() * m * out.Q;
  RatMat expect(n, n);
  expect.set_block(0, 0, out.Z);
  expect.set_block(o2, o2, out.R);
  expect.set_block(o4, o4, out.Y);
  if (!(check == expect)) throw InternalError("schur_reduce witness check failed");
  return out;
}

}  // namespace nilric
