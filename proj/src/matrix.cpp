#include "nilric/matrix.hpp"

#include <sstream>

namespace nilric {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::diagonal(const RatVec& d) {
  RatMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMat RatMat::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  RatMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error("ragged initializer");
    std::size_t j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RatMat RatMat::from_columns(const std::vector<RatVec>& cols, std::size_t dim) {
  RatMat m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw Error("column length mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVec RatMat::column(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatVec RatMat::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void RatMat::set_column(std::size_t j, const RatVec& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMat RatMat::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  RatMat b(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
  return b;
}

void RatMat::set_block(std::size_t i0, std::size_t j0, const RatMat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

RatMat RatMat::hcat(const RatMat& other) const {
  if (rows_ != other.rows_) throw Error("hcat row mismatch");
  RatMat m(rows_, cols_ + other.cols_);
  m.set_block(0, 0, *this);
  m.set_block(0, cols_, other);
  return m;
}

bool RatMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMat::is_zero() const {
  for (const Rat& q : a_)
    if (!nilric::is_zero(q)) return false;
  return true;
}

RatMat& RatMat::operator+=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape mismatch in +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

RatMat& RatMat::operator-=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape mismatch in -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

RatMat& RatMat::operator*=(const Rat& s) {
  for (Rat& q : a_) q *= s;
  return *this;
}

RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw Error("shape mismatch in *");
  RatMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMat operator*(const Rat& s, RatMat a) { return a *= s; }

bool operator==(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

RatVec operator*(const RatMat& a, const RatVec& v) {
  if (a.cols() != v.size()) throw Error("shape mismatch in mat*vec");
  RatVec r(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) r[i] += a(i, j) * v[j];
  return r;
}

Rat dot(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw Error("length mismatch in dot");
  Rat s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

bool vec_is_zero(const RatVec& v) {
  for (const Rat& q : v)
    if (!is_zero(q)) return false;
  return true;
}

Rat trace_of_product(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw Error("shape mismatch in tr(ab)");
  Rat s(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) s += a(i, j) * b(j, i);
  return s;
}

std::string RatMat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << rat_str((*this)(i, j));
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rat_str(v[i]);
  return s + ")";
}

}  // namespace nilric
