#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilric {

// Exact arbitrary-precision rational. A value is zero iff its numerator is
// zero; no epsilon appears anywhere in the library.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, non-positive-definite metrics, unknown ids.
struct ValidationError : Error {
  using Error::Error;
};

// A structural guarantee failed (block pattern, signature cross-check).
// Reaching this means a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline bool is_zero(const Rat& q) { return sign(q) == 0; }

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& q);

inline double rat_double(const Rat& q) { return q.get_d(); }

// Best continued-fraction approximation of x with denominator <= max_den.
Rat rat_from_double(double x, std::int64_t max_den = 1000000);

// Element of the quadratic field Q(sqrt(2)), kept exact as a + b*sqrt(2).
// Used only where source data is irrational; everything user-facing is Rat.
struct Quad {
  Rat a;  // rational part
  Rat b;  // coefficient of sqrt(2)

  Quad() : a(0), b(0) {}
  Quad(Rat r) : a(std::move(r)), b(0) {}  // NOLINT: implicit from Rat intended
  Quad(Rat r, Rat s) : a(std::move(r)), b(std::move(s)) {}

  bool is_zero() const { return nilric::is_zero(a) && nilric::is_zero(b); }
  double to_double() const { return rat_double(a) + rat_double(b) * 1.4142135623730951; }

  Quad operator-() const { return Quad(-a, -b); }
  Quad& operator+=(const Quad& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Quad& operator-=(const Quad& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
};

inline Quad operator+(Quad x, const Quad& y) { return x += y; }
inline Quad operator-(Quad x, const Quad& y) { return x -= y; }
inline Quad operator*(const Quad& x, const Quad& y) {
  return Quad(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a);
}
inline bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }

Quad quad_inverse(const Quad& x);
inline Quad operator/(const Quad& x, const Quad& y) { return x * quad_inverse(y); }

// Parses "r", "sqrt(2)", "r*sqrt(2)" and "r+s*sqrt(2)" / "r-s*sqrt(2)".
Quad quad_parse(const std::string& s);
std::string quad_str(const Quad& q);

}  // namespace nilric
