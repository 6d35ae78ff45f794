#include "nilric/realize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace nilric {

namespace {

bool is_identity(const RatMat& m) {
  return m.rows() == m.cols() && m == RatMat::identity(m.rows());
}

Metric diag_metric(const RatVec& diag, const RatMat& basis) {
  if (is_identity(basis)) return Metric::from_diagonal(diag);
  return Metric::from_diagonal_on_basis(diag, basis);
}

// Certify a candidate diagonal point: the full exact pipeline must report
// exactly the requested triple. Returns nullopt when it reports another
// admissible signature instead.
std::optional<RealizationCertificate> certify(const LieAlgebra& a, const RatVec& diag,
                                              const RatMat& basis, const SignatureTriple& target,
                                              const std::string& method) {
  Metric metric = diag_metric(diag, basis);
  RicciSignatureResult res = ricci_signature(a, metric);
  if (res.signature != target) return std::nullopt;
  return RealizationCertificate{"", target, res.signature, std::move(metric), method,
                                res.reduced.blocks.R};
}

// Exact repair of the zero-targeted coordinates: depth-first search over
// (equation order, solve variable), where each step solves F_j = 0 for a
// variable F_j is linear in, refusing variables that occur in an already
// repaired equation. Positivity of every assignment is enforced.
struct ZeroRepair {
  const std::vector<MPoly>& polys;
  std::vector<int> signs;  // requested sign per polynomial
  int budget = 4000;

  bool run(RatVec& point) {
    std::vector<std::size_t> zeros;
    for (std::size_t j = 0; j < polys.size(); ++j)
      if (signs[j] == 0) zeros.push_back(j);
    std::vector<bool> done(polys.size(), false);
    return dfs(point, zeros, done);
  }

 private:
  bool dfs(RatVec& point, std::vector<std::size_t> remaining, std::vector<bool>& done) {
    if (--budget < 0) return false;
    if (remaining.empty()) return check_strict(point);
    for (std::size_t pick = 0; pick < remaining.size(); ++pick) {
      std::size_t j = remaining[pick];
      if (polys[j].eval<Rat>(point) == 0) {
        auto rest = remaining;
        rest.erase(rest.begin() + pick);
        done[j] = true;
        if (dfs(point, rest, done)) return true;
        done[j] = false;
        continue;
      }
      for (std::size_t v = 0; v < polys[j].nvars(); ++v) {
        if (polys[j].degree_in(v) != 1) continue;
        bool touches_done = false;
        for (std::size_t k = 0; k < polys.size() && !touches_done; ++k)
          if (done[k] && (polys[k].degree_in(v) != 0)) touches_done = true;
        if (touches_done) continue;
        MPolyLinearSplit split = polys[j].split_linear(v);
        Rat coeff = split.coeff.eval<Rat>(point);
        if (is_zero(coeff)) continue;
        Rat solved = -split.rest.eval<Rat>(point) / coeff;
        if (sign(solved) <= 0) continue;
        Rat saved = point[v];
        point[v] = solved;
        auto rest = remaining;
        rest.erase(rest.begin() + pick);
        done[j] = true;
        if (dfs(point, rest, done)) return true;
        done[j] = false;
        point[v] = saved;
      }
    }
    return false;
  }

  bool check_strict(const RatVec& point) const {
    for (std::size_t j = 0; j < polys.size(); ++j) {
      int s = sign(polys[j].eval<Rat>(point));
      if (signs[j] == 0 ? s != 0 : s != signs[j]) return false;
    }
    return true;
  }
};

// Small dense double solver for the Newton step.
bool solve_double(std::vector<std::vector<double>> m, std::vector<double> b,
                  std::vector<double>& x) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[p][col])) p = r;
    if (std::fabs(m[p][col]) < 1e-14) return false;
    std::swap(m[p], m[col]);
    std::swap(b[p], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t ri = n; ri-- > 0;) {
    double s = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) s -= m[ri][c] * x[c];
    x[ri] = s / m[ri][ri];
  }
  return true;
}

// Damped Newton for F(x) = t on the own variables, everything else pinned at
// the seed. Returns the full diagonal as doubles.
std::optional<std::vector<double>> newton_solve(const DiagSystem& sys, const RatVec& seed,
                                                const std::vector<double>& targets,
                                                const NewtonOptions& opts) {
  std::size_t n = seed.size(), k = sys.polys.size();
  std::vector<double> point(n);
  for (std::size_t i = 0; i < n; ++i) point[i] = rat_double(seed[i]);
  std::vector<MPoly> grads(k * k, MPoly(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < k; ++c) grads[j * k + c] = sys.polys[j].derivative(sys.own[c]);
  auto residual = [&](const std::vector<double>& p, std::vector<double>& r) {
    double norm = 0;
    for (std::size_t j = 0; j < k; ++j) {
      r[j] = sys.polys[j].eval_double(p) - targets[j];
      norm = std::max(norm, std::fabs(r[j]));
    }
    return norm;
  };
  double tscale = 1.0;
  for (double t : targets) tscale = std::max(tscale, std::fabs(t));
  std::vector<double> r(k), step;
  double rnorm = residual(point, r);
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (rnorm <= opts.residual_tol * tscale) return point;
    std::vector<std::vector<double>> jac(k, std::vector<double>(k));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < k; ++c) jac[j][c] = grads[j * k + c].eval_double(point);
    if (!solve_double(jac, r, step)) return std::nullopt;
    double lambda = 1.0;
    bool moved = false;
    for (int damp = 0; damp < 40; ++damp, lambda *= 0.5) {
      std::vector<double> trial = point;
      bool positive = true;
      for (std::size_t c = 0; c < k; ++c) {
        trial[sys.own[c]] -= lambda * step[c];
        if (trial[sys.own[c]] <= 1e-9) positive = false;
      }
      if (!positive) continue;
      std::vector<double> tr(k);
      double tnorm = residual(trial, tr);
      if (tnorm < rnorm) {
        point = std::move(trial);
        r = std::move(tr);
        rnorm = tnorm;
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return std::nullopt;
}

// Walks the distinct arrangements of the requested sign counts in
// lexicographic order, stopping after the caller's budget. Lazy by design:
// high-dimensional systems have astronomically many arrangements and the
// first few almost always suffice.
template <class Fn>
void for_each_sign_assignment(const SignatureTriple& m, int budget, Fn&& fn) {
  std::vector<int> base;
  base.insert(base.end(), m.neg, -1);
  base.insert(base.end(), m.zero, 0);
  base.insert(base.end(), m.pos, +1);
  std::sort(base.begin(), base.end());
  do {
    if (fn(base)) return;
    if (--budget <= 0) return;
  } while (std::next_permutation(base.begin(), base.end()));
}

// Exact one-variable dichotomy for systems with a single reduced entry:
// F = alpha x^2 - beta with alpha, beta > 0 near the seed, so scaling the
// own variable up forces +, down forces -.
std::optional<RatVec> dichotomy_point(const DiagSystem& sys, const RatVec& seed, int want) {
  RatVec point = seed;
  if (want == 0) return point;
  std::size_t v = sys.own[0];
  Rat factor = want > 0 ? Rat(2) : Rat(1, 2);
  for (int step = 0; step < 80; ++step) {
    point[v] *= factor;
    if (sign(sys.polys[0].eval<Rat>(point)) == want) return point;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RealizationCertificate> newton_realize(const LieAlgebra& a, const DiagSystem& sys,
                                                     const RatVec& seed,
                                                     const SignatureTriple& target,
                                                     const NewtonOptions& opts) {
  std::size_t n = a.dim();
  if (seed.size() != n) throw ValidationError("seed length mismatch");
  SignatureTriple m{target.neg - static_cast<int>(sys.n4), target.zero - static_cast<int>(sys.n3),
                    target.pos - static_cast<int>(sys.n1)};
  if (m.neg < 0 || m.zero < 0 || m.pos < 0 || m.total() != static_cast<int>(sys.n2))
    return std::nullopt;  // this strategy cannot reach the target
  if (sys.n2 == 0 || m == SignatureTriple{0, static_cast<int>(sys.n2), 0})
    return certify(a, seed, sys.basis, target, "newton-nice");
  if (sys.n2 == 1) {
    int want = m.pos == 1 ? +1 : (m.neg == 1 ? -1 : 0);
    std::optional<RatVec> point = dichotomy_point(sys, seed, want);
    if (!point) return std::nullopt;
    return certify(a, *point, sys.basis, target, "two-sided-diagonal");
  }
  std::size_t k = sys.polys.size();
  // Scale per equation: the divisor monomial at the seed, so the targeted
  // Ricci entries sit at +-eps in natural units.
  std::vector<double> seed_d(n);
  for (std::size_t i = 0; i < n; ++i) seed_d[i] = rat_double(seed[i]);
  std::vector<double> scale(k);
  for (std::size_t j = 0; j < k; ++j) scale[j] = std::fabs(sys.divisors[j].eval_double(seed_d));
  std::optional<RealizationCertificate> found;
  for_each_sign_assignment(m, 2000, [&](const std::vector<int>& assignment) {
    for (const Rat& eps : opts.eps_ladder) {
      std::vector<double> targets(k);
      for (std::size_t j = 0; j < k; ++j) targets[j] = assignment[j] * rat_double(eps) * scale[j];
      std::optional<std::vector<double>> sol = newton_solve(sys, seed, targets, opts);
      if (!sol) continue;
      // Coarse convergents first: strict signs survive rough rounding and
      // the certificate stays small. Fall back to the full bound.
      for (std::int64_t den : {std::int64_t{1000}, opts.max_denominator}) {
        RatVec point = seed;
        for (std::size_t c = 0; c < k; ++c)
          point[sys.own[c]] = rat_from_double((*sol)[sys.own[c]], den);
        ZeroRepair repair{sys.polys, assignment};
        if (!repair.run(point)) continue;
        found = certify(a, point, sys.basis, target, "newton-nice");
        if (found) return true;
      }
    }
    return false;
  });
  return found;
}

namespace {

RatVec widened(const RatVec& ladder) {
  RatVec out = ladder;
  Rat lo = *std::min_element(ladder.begin(), ladder.end());
  Rat hi = *std::max_element(ladder.begin(), ladder.end());
  out.push_back(lo / 2);
  out.push_back(lo / 4);
  out.push_back(hi * 2);
  out.push_back(hi * 4);
  return out;
}

std::optional<RealizationCertificate> sweep_grid(const LieAlgebra& a, const Recipe& recipe,
                                                 const SignatureTriple& target,
                                                 const std::vector<RatVec>& ladders) {
  std::vector<std::size_t> idx(recipe.slots.size(), 0);
  for (;;) {
    RatVec diag = recipe.base_diag;
    for (std::size_t s = 0; s < recipe.slots.size(); ++s)
      diag[recipe.slots[s].pos] = ladders[s][idx[s]];
    std::optional<RealizationCertificate> cert =
        certify(a, diag, recipe.basis, target, "recipe-sweep");
    if (cert) return cert;
    std::size_t s = 0;
    while (s < idx.size() && ++idx[s] == ladders[s].size()) idx[s++] = 0;
    if (s == idx.size()) return std::nullopt;
  }
}

}  // namespace

std::optional<RealizationCertificate> recipe_sweep(const LieAlgebra& a, const Recipe& recipe,
                                                   const SignatureTriple& target) {
  std::vector<RatVec> ladders;
  for (const Recipe::Slot& s : recipe.slots) {
    if (s.ladder.empty()) throw ValidationError("recipe slot with empty ladder");
    ladders.push_back(s.ladder);
  }
  if (auto cert = sweep_grid(a, recipe, target, ladders)) return cert;
  for (RatVec& l : ladders) l = widened(l);
  return sweep_grid(a, recipe, target, ladders);
}

std::optional<RatVec> find_seed(const DiagSystem& sys, const NewtonOptions& opts) {
  std::size_t n = sys.basis.rows(), k = sys.polys.size();
  auto exact_zero = [&](const RatVec& p) {
    for (const MPoly& f : sys.polys)
      if (!(f.eval<Rat>(p) == 0)) return false;
    return true;
  };
  auto jacobian_ok = [&](const RatVec& p) {
    std::vector<Quad> q(p.begin(), p.end());
    return check_nice_algebra(sys, q).jacobian_regular;
  };
  RatVec ones(n, Rat(1));
  if (exact_zero(ones) && jacobian_ok(ones)) return ones;
  // Float pre-solve toward F = 0 from random positive starts, then exact
  // repair of every coordinate.
  std::mt19937_64 rng(opts.random_seed);
  std::uniform_int_distribution<int> num(1, 6), den(1, 4);
  std::vector<int> all_zero(k, 0);
  for (int attempt = 0; attempt < opts.random_attempts; ++attempt) {
    RatVec start(n);
    for (std::size_t i = 0; i < n; ++i) {
      start[i] = Rat(num(rng), den(rng));
      start[i].canonicalize();
    }
    std::vector<double> zeros(k, 0.0);
    std::optional<std::vector<double>> sol = newton_solve(sys, start, zeros, opts);
    if (!sol) continue;
    for (std::int64_t den : {std::int64_t{1000}, opts.max_denominator}) {
      RatVec point = start;
      for (std::size_t c = 0; c < k; ++c)
        point[sys.own[c]] = rat_from_double((*sol)[sys.own[c]], den);
      ZeroRepair repair{sys.polys, all_zero};
      if (!repair.run(point)) continue;
      if (exact_zero(point) && jacobian_ok(point)) return point;
    }
  }
  return std::nullopt;
}

RealizationOutcome realize_all(const RealizationPlan& plan, const NewtonOptions& opts) {
  const LieAlgebra& a = plan.algebra;
  if (!a.nilpotent())
    throw ValidationError("realization targets are defined for nilpotent algebras");
  DimensionProfile profile = dimension_profile(a);
  SignSet admissible = sign_set(profile);
  std::vector<SignatureTriple> targets(admissible.triples.begin(), admissible.triples.end());

  // Strategy list shared across targets.
  std::vector<std::pair<DiagSystem, RatVec>> systems;
  for (const DiagSystemStrategy& s : plan.systems)
    systems.emplace_back(build_diag_system(a, s.basis), s.seed);
  if (systems.empty() && plan.recipes.empty() && profile.d != profile.ell) {
    // No published data: see whether the standard basis happens to be nice
    // with center inside the derived ideal, and hunt for a seed.
    RatMat id = RatMat::identity(a.dim());
    if (is_nice_basis(a, id).is_nice) {
      Subspace z = center(a), d = derived_ideal(a);
      if (d.contains(z)) {
        std::vector<RatVec> cols;
        std::vector<std::size_t> zpart, dpart, rest;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          RatVec e(a.dim(), Rat(0));
          e[i] = 1;
          if (z.contains(e))
            zpart.push_back(i);
          else if (d.contains(e))
            dpart.push_back(i);
          else
            rest.push_back(i);
        }
        if (zpart.size() == z.dim() && zpart.size() + dpart.size() == d.dim()) {
          for (std::size_t i : zpart) cols.push_back(RatMat::identity(a.dim()).column(i));
          for (std::size_t i : dpart) cols.push_back(RatMat::identity(a.dim()).column(i));
          for (std::size_t i : rest) cols.push_back(RatMat::identity(a.dim()).column(i));
          RatMat basis = RatMat::from_columns(cols, a.dim());
          try {
            DiagSystem sys = build_diag_system(a, basis);
            if (std::optional<RatVec> seed = find_seed(sys, opts))
              systems.emplace_back(std::move(sys), *seed);
          } catch (const ValidationError&) {
            // fall through to the random search
          }
        }
      }
    }
  }

  const bool two_step = profile.d == profile.ell;  // [g,g] inside the center
  RealizationOutcome out;
  std::vector<std::optional<RealizationCertificate>> slots(targets.size());
  std::vector<std::string> reasons(targets.size());

  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const SignatureTriple& target = targets[ti];
    std::optional<RealizationCertificate> cert;
    // The Ricci form of a nilpotent metric algebra is positive semidefinite
    // on the center (each central direction u has ric(u,u) equal to a sum of
    // squared bracket components), so a negative-definite subspace meets the
    // center trivially and s- can never exceed n - dim Z. Targets beyond
    // that ceiling are unrealizable by any metric.
    if (target.neg > static_cast<int>(profile.n - profile.k)) {
      reasons[ti] = "unrealizable: the Ricci form is positive semidefinite on the center, so "
                    "s- <= n - dim Z = " +
                    std::to_string(profile.n - profile.k);
      continue;
    }
    if (two_step) {
      RatVec ones(a.dim(), Rat(1));
      cert = certify(a, ones, RatMat::identity(a.dim()), target, "two-sided-diagonal");
    }
    for (const auto& [sys, seed] : systems) {
      if (cert) break;
      cert = newton_realize(a, sys, seed, target, opts);
    }
    for (const Recipe& recipe : plan.recipes) {
      if (cert) break;
      cert = recipe_sweep(a, recipe, target);
    }
    if (!cert) {
      // Seeded random search: diagonal metrics on the standard basis first,
      // then on randomly sheared bases (a plain diagonal cannot tilt the
      // center out of the derived ideal's orthogonal complement, so some
      // admissible signatures need the mixing).
      std::mt19937_64 rng(opts.random_seed + 977 * ti);
      std::uniform_int_distribution<int> num(1, 8), den(1, 4), off(-2, 2), pos(0, a.dim() - 1);
      for (int attempt = 0; attempt < opts.random_attempts && !cert; ++attempt) {
        RatVec diag(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) {
          diag[i] = Rat(num(rng), den(rng));
          diag[i].canonicalize();
        }
        RatMat basis = RatMat::identity(a.dim());
        if (attempt % 3 != 0) {
          for (int shears = 1 + attempt % 3; shears > 0; --shears) {
            std::size_t r = pos(rng), c = pos(rng);
            if (r != c) basis(r, c) = off(rng);
          }
          if (!inverse(basis)) continue;
        }
        cert = certify(a, diag, basis, target, "random-diagonal");
      }
    }
    slots[ti] = std::move(cert);
  }

  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    if (slots[ti]) {
      slots[ti]->algebra_id = plan.id;
      out.certificates.push_back(std::move(*slots[ti]));
    } else {
      std::string reason =
          reasons[ti].empty() ? "no registered strategy produced a certificate" : reasons[ti];
      out.unrealized.push_back(UnrealizedTarget{targets[ti], std::move(reason)});
    }
  }
  return out;
}

}  // namespace nilric
