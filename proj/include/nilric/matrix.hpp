#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nilric/rational.hpp"

namespace nilric {

// Dense matrix of exact rationals. Everything in this library is small
// (order <= 10 or so), so no sparsity and no cleverness.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n);
  static RatMat diagonal(const RatVec& d);
  static RatMat from_rows(std::initializer_list<std::initializer_list<int>> rows);
  // Columns given as a list of vectors.
  static RatMat from_columns(const std::vector<RatVec>& cols, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec column(std::size_t j) const;
  RatVec row(std::size_t i) const;
  void set_column(std::size_t j, const RatVec& v);

  RatMat transpose() const;
  RatMat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
  void set_block(std::size_t i0, std::size_t j0, const RatMat& b);
  RatMat hcat(const RatMat& other) const;

  bool is_symmetric() const;
  bool is_zero() const;

  RatMat& operator+=(const RatMat& o);
  RatMat& operator-=(const RatMat& o);
  RatMat& operator*=(const Rat& s);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

RatMat operator+(RatMat a, const RatMat& b);
RatMat operator-(RatMat a, const RatMat& b);
RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator*(const Rat& s, RatMat a);
bool operator==(const RatMat& a, const RatMat& b);

RatVec operator*(const RatMat& a, const RatVec& v);

Rat dot(const RatVec& u, const RatVec& v);
bool vec_is_zero(const RatVec& v);
Rat trace_of_product(const RatMat& a, const RatMat& b);  // tr(a*b) without forming it

std::string vec_str(const RatVec& v);

}  // namespace nilric
