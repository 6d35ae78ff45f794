#include "nilric/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nilric {

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t idx) {
  MPoly p(nvars);
  Expo e(nvars, 0);
  e[idx] = 1;
  p.add_term(e, Rat(1));
  return p;
}

MPoly MPoly::monomial(std::size_t nvars, const Expo& e, const Rat& c) {
  MPoly p(nvars);
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
  if (e.size() != nvars_) throw Error("exponent vector length mismatch");
  if (nilric::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (nilric::is_zero(it->second)) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw Error("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw Error("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
  return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw Error("variable count mismatch");
  MPoly p(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(nvars_);
      for (std::size_t v = 0; v < nvars_; ++v) e[v] = e1[v] + e2[v];
      p.add_term(e, c1 * c2);
    }
  return p;
}

MPoly MPoly::operator-() const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, Rat(-c));
  return p;
}

MPoly MPoly::scaled(const Rat& s) const {
  MPoly p(nvars_);
  if (nilric::is_zero(s)) return p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, Rat(c * s));
  return p;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var] -= 1;
    p.add_term(d, c * e[var]);
  }
  return p;
}

std::int32_t MPoly::min_exponent(std::size_t var) const {
  std::int32_t m = 0;
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

std::int32_t MPoly::degree_in(std::size_t var) const {
  std::int32_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int32_t deg = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int32_t d = 0;
    for (std::int32_t x : e) d += x;
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  return true;
}

std::int32_t MPoly::total_degree() const {
  std::int32_t deg = 0;
  for (const auto& [e, c] : terms_) {
    std::int32_t d = 0;
    for (std::int32_t x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

MPoly MPoly::clear_denominators() {
  Expo shift(nvars_, 0);
  for (std::size_t v = 0; v < nvars_; ++v) {
    std::int32_t m = min_exponent(v);
    if (m < 0) shift[v] = -m;
  }
  MPoly divisor = monomial(nvars_, shift, Rat(1));
  bool trivial = std::all_of(shift.begin(), shift.end(), [](std::int32_t x) { return x == 0; });
  if (trivial) return divisor;
  std::map<Expo, Rat> shifted;
  for (auto& [e, c] : terms_) {
    Expo s = e;
    for (std::size_t v = 0; v < nvars_; ++v) s[v] += shift[v];
    shifted.emplace(std::move(s), std::move(c));
  }
  terms_ = std::move(shifted);
  return divisor;
}

MPolyLinearSplit MPoly::split_linear(std::size_t var) const {
  if (degree_in(var) != 1) throw Error("polynomial is not linear in the requested variable");
  MPolyLinearSplit out{MPoly(nvars_), MPoly(nvars_)};
  for (const auto& [e, c] : terms_) {
    Expo r = e;
    if (e[var] == 1) {
      r[var] = 0;
      out.coeff.add_term(r, c);
    } else {
      out.rest.add_term(r, c);
    }
  }
  return out;
}

double MPoly::eval_double(const std::vector<double>& point) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = rat_double(c);
    for (std::size_t v = 0; v < nvars_; ++v)
      if (e[v] != 0) t *= std::pow(point[v], e[v]);
    acc += t;
  }
  return acc;
}

std::string MPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in graded-reverse order of the stored map for stability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat coeff = c;
    if (!first) os << (sign(coeff) < 0 ? " - " : " + ");
    if (!first && sign(coeff) < 0) coeff = -coeff;
    if (first && sign(coeff) < 0) {
      os << "-";
      coeff = -coeff;
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (has_var) mono << "*";
      has_var = true;
      if (v < var_names.size())
        mono << var_names[v];
      else
        mono << "a" << (v + 1);
      if (e[v] != 1) mono << "^" << e[v];
    }
    if (!has_var) {
      os << rat_str(coeff);
    } else {
      if (coeff != 1) os << rat_str(coeff) << "*";
      os << mono.str();
    }
  }
  return os.str();
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

bool operator==(const MPoly& a, const MPoly& b) {
  return a.nvars() == b.nvars() && a.terms() == b.terms();
}

}  // namespace nilric
