#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilric/rational.hpp"

namespace nilric {

struct MPolyLinearSplit;

// Sparse multivariate polynomial with rational coefficients over variables
// a1..an. Exponents may be negative during assembly (Laurent terms coming
// from quotients of diagonal metric entries); clear_denominators() shifts a
// Laurent polynomial to an honest one and reports the monomial divisor.
class MPoly {
 public:
  using Expo = std::vector<std::int32_t>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t idx);
  static MPoly monomial(std::size_t nvars, const Expo& e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Expo, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Expo& e, const Rat& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(const Rat& s) const;

  MPoly derivative(std::size_t var) const;

  // Smallest exponent of `var` over all terms (0 for an empty polynomial).
  std::int32_t min_exponent(std::size_t var) const;
  // Largest exponent of `var` over all terms.
  std::int32_t degree_in(std::size_t var) const;
  // Total degree of each term must agree for a homogeneous polynomial.
  bool is_homogeneous() const;
  std::int32_t total_degree() const;

  // Multiplies by prod var^(-min_exponent) over vars with negative minimum;
  // returns that divisor monomial (an MPoly with a single term).
  MPoly clear_denominators();

  // Writes f = coeff * var + rest when degree_in(var) == 1; both parts have
  // the variable removed.
  MPolyLinearSplit split_linear(std::size_t var) const;

  template <class T>
  T eval(const std::vector<T>& point) const {
    T acc{};
    for (const auto& [e, c] : terms_) {
      T term = T(Rat(c));
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (e[v] == 0) continue;
        if (e[v] < 0) throw Error("evaluating a Laurent term; clear denominators first");
        for (std::int32_t k = 0; k < e[v]; ++k) term = term * point[v];
      }
      acc += term;
    }
    return acc;
  }

  double eval_double(const std::vector<double>& point) const;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Expo, Rat> terms_;
};

struct MPolyLinearSplit {
  MPoly coeff;
  MPoly rest;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
bool operator==(const MPoly& a, const MPoly& b);

}  // namespace nilric
