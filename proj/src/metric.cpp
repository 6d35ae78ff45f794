#include "nilric/metric.hpp"

namespace nilric {

Metric::Metric(RatMat gram, std::optional<RatVec> diag, std::optional<RatMat> basis_change)
    : gram_(std::move(gram)), diag_(std::move(diag)), basis_change_(std::move(basis_change)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
    throw ValidationError("Gram matrix must be square and nonempty");
  if (!gram_.is_symmetric()) throw ValidationError("Gram matrix must be symmetric");
  for (std::size_t k = 1; k <= gram_.rows(); ++k) {
    Rat minor = determinant(gram_.block(0, 0, k, k));
    if (sign(minor) <= 0)
      throw ValidationError("Gram matrix is not positive definite (leading minor " +
                            std::to_string(k) + " is " + rat_str(minor) + ")");
  }
  gram_inv_ = *inverse(gram_);  // invertible once positive definite
}

Metric Metric::from_gram(RatMat gram) { return Metric(std::move(gram), std::nullopt, std::nullopt); }

Metric Metric::from_diagonal(const RatVec& d) {
  return Metric(RatMat::diagonal(d), d, std::nullopt);
}

Metric Metric::from_gram_on_basis(const RatMat& gram_on_basis, const RatMat& p) {
  std::optional<RatMat> pinv = inverse(p);
  if (!pinv) throw ValidationError("basis change matrix is singular");
  return Metric(pinv->transpose() * gram_on_basis * (*pinv), std::nullopt, p);
}

Metric Metric::from_diagonal_on_basis(const RatVec& d, const RatMat& p) {
  std::optional<RatMat> pinv = inverse(p);
  if (!pinv) throw ValidationError("basis change matrix is singular");
  return Metric(pinv->transpose() * RatMat::diagonal(d) * (*pinv), d, p);
}

Rat Metric::inner(const RatVec& u, const RatVec& v) const { return dot(u, gram_ * v); }

}  // namespace nilric
