#include "nilric/lie_algebra.hpp"

namespace nilric {

namespace {

RatVec jacobi_residual(const std::vector<RatMat>& ad, std::size_t n, int i, int j, int k) {
  RatVec ei(n, Rat(0)), ej(n, Rat(0)), ek(n, Rat(0));
  ei[i] = 1;
  ej[j] = 1;
  ek[k] = 1;
  RatVec bij = ad[i] * ej, bjk = ad[j] * ek, bki = ad[k] * ei;
  RatVec r(n, Rat(0));
  // [[ei,ej],ek] = -ad_ek [ei,ej]
  RatVec t1 = ad[k] * bij, t2 = ad[i] * bjk, t3 = ad[j] * bki;
  for (std::size_t a = 0; a < n; ++a) r[a] = -t1[a] - t2[a] - t3[a];
  return r;
}

std::vector<RatMat> build_ad(std::size_t n,
                             const std::map<std::pair<int, int>, std::map<int, Rat>>& brackets) {
  std::vector<RatMat> ad(n, RatMat(n, n));
  for (const auto& [pair, rhs] : brackets) {
    int i = pair.first - 1, j = pair.second - 1;
    for (const auto& [k, c] : rhs) {
      ad[i](k - 1, j) += c;
      ad[j](k - 1, i) -= c;
    }
  }
  return ad;
}

// Series and nilpotency from the ad matrices alone.
std::pair<std::vector<Subspace>, bool> central_series(std::size_t n,
                                                      const std::vector<RatMat>& ad) {
  std::vector<Subspace> series;
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gens.push_back(ad[i].column(j));
  Subspace cur = span(gens, n);
  for (;;) {
    series.push_back(cur);
    std::vector<RatVec> next_gens;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < cur.dim(); ++j) next_gens.push_back(ad[i] * cur.basis.column(j));
    Subspace next = span(next_gens, n);
    if (next.dim() == cur.dim()) break;
    cur = next;
  }
  return {series, series.back().dim() == 0};
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim,
                       std::map<std::pair<int, int>, std::map<int, Rat>> brackets,
                       std::vector<std::string> labels)
    : n_(dim), brackets_(std::move(brackets)), labels_(std::move(labels)) {
  if (n_ == 0) throw ValidationError("algebra dimension must be positive");
  for (auto it = brackets_.begin(); it != brackets_.end();) {
    auto [i, j] = it->first;
    if (i < 1 || j < 1 || i > static_cast<int>(n_) || j > static_cast<int>(n_))
      throw ValidationError("bracket index out of range");
    if (i >= j) throw ValidationError("only i<j brackets are accepted");
    for (auto& [k, c] : it->second)
      if (k < 1 || k > static_cast<int>(n_)) throw ValidationError("bracket target out of range");
    // Drop stored zeros so equality of constants is equality of maps.
    std::erase_if(it->second, [](const auto& kv) { return is_zero(kv.second); });
    it = it->second.empty() ? brackets_.erase(it) : std::next(it);
  }
  if (!labels_.empty() && labels_.size() != n_)
    throw ValidationError("label count does not match dimension");
  ad_.reserve(n_);
  std::vector<RatMat> ad = build_ad(n_, brackets_);
  for (auto& m : ad) ad_.push_back(std::move(m));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) {
        RatVec r = jacobi_residual(ad_, n_, static_cast<int>(i), static_cast<int>(j),
                                   static_cast<int>(k));
        if (!vec_is_zero(r))
          throw ValidationError("Jacobi identity fails on basis triple (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      }
  auto [series, nil] = central_series(n_, ad_);
  nilpotent_ = nil;
  nilpotency_class_ = nil ? static_cast<int>(series.size()) : 0;
}

std::string LieAlgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

Rat LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Rat(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
  if (it == brackets_.end()) return Rat(0);
  auto kt = it->second.find(static_cast<int>(k) + 1);
  if (kt == it->second.end()) return Rat(0);
  return flip ? Rat(-kt->second) : kt->second;
}

RatVec LieAlgebra::bracket(const RatVec& u, const RatVec& v) const {
  if (u.size() != n_ || v.size() != n_) throw ValidationError("bracket operand length mismatch");
  RatVec r(n_, Rat(0));
  for (const auto& [pair, rhs] : brackets_) {
    std::size_t i = pair.first - 1, j = pair.second - 1;
    Rat coeff = u[i] * v[j] - u[j] * v[i];
    if (is_zero(coeff)) continue;
    for (const auto& [k, c] : rhs) r[k - 1] += coeff * c;
  }
  return r;
}

RatMat LieAlgebra::ad(const RatVec& u) const {
  if (u.size() != n_) throw ValidationError("ad operand length mismatch");
  RatMat m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!is_zero(u[i])) {
      RatMat scaled = ad_[i];
      scaled *= u[i];
      m += scaled;
    }
  return m;
}

RatMat LieAlgebra::ad_basis(std::size_t i) const { return ad_[i]; }

LieAlgebra LieAlgebra::rebased(const RatMat& p) const {
  if (p.rows() != n_ || p.cols() != n_) throw ValidationError("basis matrix has wrong shape");
  std::optional<RatMat> pinv = inverse(p);
  if (!pinv) throw ValidationError("basis matrix is singular");
  std::map<std::pair<int, int>, std::map<int, Rat>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      RatVec b = bracket(p.column(i), p.column(j));
      RatVec coords = (*pinv) * b;
      std::map<int, Rat> rhs;
      for (std::size_t k = 0; k < n_; ++k)
        if (!is_zero(coords[k])) rhs[static_cast<int>(k) + 1] = coords[k];
      if (!rhs.empty()) out[{static_cast<int>(i) + 1, static_cast<int>(j) + 1}] = std::move(rhs);
    }
  return LieAlgebra(n_, std::move(out));
}

LieAlgebra abelian_algebra(std::size_t n) { return LieAlgebra(n, {}); }

ValidityReport validate(std::size_t dim,
                        const std::map<std::pair<int, int>, std::map<int, Rat>>& brackets) {
  ValidityReport rep;
  std::vector<RatMat> ad = build_ad(dim, brackets);
  for (std::size_t i = 0; i < dim && rep.jacobi_ok; ++i)
    for (std::size_t j = i + 1; j < dim && rep.jacobi_ok; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        RatVec r = jacobi_residual(ad, dim, static_cast<int>(i), static_cast<int>(j),
                                   static_cast<int>(k));
        if (!vec_is_zero(r)) {
          rep.jacobi_ok = false;
          rep.first_failure =
              JacobiFailure{static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                            static_cast<int>(k) + 1, std::move(r)};
          break;
        }
      }
  auto [series, nil] = central_series(dim, ad);
  rep.nilpotent = nil;
  rep.series_length = series.size();
  rep.nilpotency_class = nil ? static_cast<int>(series.size()) : 0;
  return rep;
}

ValidityReport validate(const LieAlgebra& a) { return validate(a.dim(), a.stored_brackets()); }

Subspace center(const LieAlgebra& a) {
  std::size_t n = a.dim();
  // u is central iff sum_a u_a ad(e_a) = 0; stack the ad matrices column-wise.
  RatMat sys(n * n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RatMat adc = a.ad_basis(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys(i * n + j, c) = adc(i, j);
  }
  return span_columns(kernel_basis(sys));
}

Subspace derived_ideal(const LieAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gens.push_back(a.ad_basis(i).column(j));
  return span(gens, n);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Subspace> series;
  Subspace cur = derived_ideal(a);
  for (;;) {
    series.push_back(cur);
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < cur.dim(); ++j) gens.push_back(a.ad_basis(i) * cur.basis.column(j));
    Subspace next = span(gens, n);
    if (next.dim() == cur.dim()) break;
    cur = next;
  }
  return series;
}

DimensionProfile dimension_profile(const LieAlgebra& a) {
  if (!a.nilpotent()) throw ValidationError("dimension profile is defined for nilpotent algebras");
  Subspace z = center(a);
  Subspace d = derived_ideal(a);
  Subspace meet = intersect(z, d);
  return DimensionProfile{a.dim(), d.dim(), z.dim(), meet.dim()};
}

LieAlgebra algebra_from_simple_brackets(
    std::size_t dim, const std::vector<std::tuple<int, int, int, Rat>>& ijk_coeff) {
  std::map<std::pair<int, int>, std::map<int, Rat>> brackets;
  for (const auto& [i, j, k, c] : ijk_coeff) {
    auto& rhs = brackets[{i, j}];
    if (rhs.count(k)) throw ValidationError("duplicate bracket entry");
    rhs[k] = c;
  }
  return LieAlgebra(dim, std::move(brackets));
}

}  // namespace nilric
