#include "nilric/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace nilric {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ValidationError("empty rational literal");
  for (size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || t[i - 1] == '/'));
    if (!ok) throw ValidationError("bad rational literal: '" + s + "'");
  }
  Rat q;
  if (q.set_str(t, 10) != 0) throw ValidationError("bad rational literal: '" + s + "'");
  if (sgn(q.get_den()) == 0) throw ValidationError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
  if (x == 0.0) return Rat(0);
  const bool neg = x < 0;
  double y = std::fabs(x);
  // Continued-fraction convergents p/q of y; stop before q exceeds the bound.
  std::int64_t p_prev = 0, q_prev = 1, p = 1, q = 0;
  double frac = y;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    std::int64_t term = static_cast<std::int64_t>(fl);
    if (q != 0 && term > (max_den - q_prev) / q) break;  // next q would overflow bound
    std::int64_t p_next = term * p + p_prev;
    std::int64_t q_next = term * q + q_prev;
    if (q_next > max_den || p_next < 0 || q_next < 0) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    double rem = frac - fl;
    if (rem < 1e-15 * std::max(1.0, std::fabs(y))) break;
    frac = 1.0 / rem;
  }
  if (q == 0) return Rat(neg ? -1 : 1) * Rat(static_cast<long>(std::llround(y)));
  Rat r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

Quad quad_inverse(const Quad& x) {
  // 1/(a+b√2) = (a−b√2)/(a²−2b²); the norm vanishes only at zero since √2 ∉ Q.
  Rat norm = x.a * x.a - 2 * x.b * x.b;
  if (is_zero(norm)) throw Error("division by zero in Q(sqrt(2))");
  return Quad(x.a / norm, -x.b / norm);
}

namespace {

Quad quad_parse_term(const std::string& t) {
  if (t.empty()) throw ValidationError("empty term in quadratic literal");
  auto star = t.find('*');
  std::string head = t.substr(0, star);
  std::string tail = star == std::string::npos ? "" : t.substr(star + 1);
  if (t == "sqrt(2)") return Quad(Rat(0), Rat(1));
  if (t == "-sqrt(2)") return Quad(Rat(0), Rat(-1));
  if (tail == "sqrt(2)") return Quad(Rat(0), rat_parse(head));
  if (tail.empty()) return Quad(rat_parse(t));
  throw ValidationError("bad quadratic literal: '" + t + "'");
}

}  // namespace

Quad quad_parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ValidationError("empty quadratic literal");
  // Split at a top-level '+' or '-' that is not a leading sign or part of "/-".
  for (size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '*' && t[i - 1] != '+' &&
        t[i - 1] != '-') {
      Quad lhs = quad_parse_term(t.substr(0, i));
      Quad rhs = quad_parse_term(t[i] == '+' ? t.substr(i + 1) : t.substr(i));
      return lhs + rhs;
    }
  }
  return quad_parse_term(t);
}

std::string quad_str(const Quad& q) {
  if (is_zero(q.b)) return rat_str(q.a);
  std::string root = (q.b == 1) ? "sqrt(2)" : (q.b == -1 ? "-sqrt(2)" : rat_str(q.b) + "*sqrt(2)");
  if (is_zero(q.a)) return root;
  if (sign(q.b) > 0) return rat_str(q.a) + "+" + root;
  return rat_str(q.a) + root;
}

}  // namespace nilric
