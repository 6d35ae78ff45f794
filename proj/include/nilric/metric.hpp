#pragma once

#include <optional>

#include "nilric/linalg.hpp"

namespace nilric {

// Inner product on the algebra, i.e. a symmetric positive definite rational
// Gram matrix on the standard basis. Positive definiteness is certified by
// the leading principal minors, all exactly positive.
class Metric {
 public:
  static Metric from_gram(RatMat gram);
  static Metric from_diagonal(const RatVec& d);
  // Gram (or diagonal) interpreted on the basis formed by the columns of p;
  // the standard-basis Gram becomes p^{-t} G p^{-1}.
  static Metric from_gram_on_basis(const RatMat& gram_on_basis, const RatMat& p);
  static Metric from_diagonal_on_basis(const RatVec& d, const RatMat& p);

  std::size_t dim() const { return gram_.rows(); }
  const RatMat& gram() const { return gram_; }
  const RatMat& gram_inverse() const { return gram_inv_; }
  Rat inner(const RatVec& u, const RatVec& v) const;

  // Presentation used for reports: diagonal values and/or basis change, when
  // the metric was built that way.
  const std::optional<RatVec>& diag_presentation() const { return diag_; }
  const std::optional<RatMat>& basis_change() const { return basis_change_; }

 private:
  explicit Metric(RatMat gram, std::optional<RatVec> diag, std::optional<RatMat> basis_change);

  RatMat gram_;
  RatMat gram_inv_;
  std::optional<RatVec> diag_;
  std::optional<RatMat> basis_change_;
};

}  // namespace nilric
