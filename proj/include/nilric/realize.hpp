#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilric/nice.hpp"

namespace nilric {

// A rational metric together with the exactly computed signature it attains.
// `achieved == target` always holds for a returned certificate; the metric
// and the reduced matrix are the printable witness.
struct RealizationCertificate {
  std::string algebra_id;
  SignatureTriple target;
  SignatureTriple achieved;
  Metric metric;
  std::string method;  // two-sided-diagonal | newton-nice | recipe-sweep | random-diagonal
  RatMat reduced;      // reduced matrix at the certified point
};

// A published construction: diagonal metrics on a fixed (not necessarily
// nice) characteristic basis, with one or two entries swept over a ladder of
// rational values while the rest stay fixed.
struct Recipe {
  struct Slot {
    std::size_t pos;  // 0-based diagonal position in the recipe basis
    RatVec ladder;
  };
  RatMat basis;
  RatVec base_diag;
  std::vector<Slot> slots;
};

struct NewtonOptions {
  int max_iterations = 200;
  double residual_tol = 1e-12;
  std::vector<Rat> eps_ladder{Rat(1, 4), Rat(1, 16), Rat(1, 64)};
  std::int64_t max_denominator = 1000000;
  std::uint64_t random_seed = 1;
  int random_attempts = 400;
};

// Realizes one target signature with a diagonal metric on the system's
// basis. Strict signs come from a damped Newton search near the seed
// followed by continued-fraction rationalization; zero entries are then made
// exact by solving single-variable linear slices of the system. The final
// point is certified through the full exact signature pipeline.
std::optional<RealizationCertificate> newton_realize(const LieAlgebra& a, const DiagSystem& sys,
                                                     const RatVec& seed,
                                                     const SignatureTriple& target,
                                                     const NewtonOptions& opts = {});

// Walks the recipe grid in order and returns the first point whose exact
// signature equals the target; widens the ladders once before giving up.
std::optional<RealizationCertificate> recipe_sweep(const LieAlgebra& a, const Recipe& recipe,
                                                   const SignatureTriple& target);

struct DiagSystemStrategy {
  RatMat basis;
  RatVec seed;  // exact zero of the system, strictly positive
};

struct RealizationPlan {
  std::string id;
  LieAlgebra algebra;
  std::vector<DiagSystemStrategy> systems;
  std::vector<Recipe> recipes;
};

struct UnrealizedTarget {
  SignatureTriple target;
  std::string reason;
};

struct RealizationOutcome {
  std::vector<RealizationCertificate> certificates;
  std::vector<UnrealizedTarget> unrealized;  // never silently dropped
};

// One certificate per admissible signature: identity metric for 2-step
// algebras, seed systems for the rest, then recipes, then a seeded random
// diagonal search. Targets are processed in deterministic order.
RealizationOutcome realize_all(const RealizationPlan& plan, const NewtonOptions& opts = {});

// Attempts to find an exact positive rational zero of the system with
// nonsingular Jacobian (all-ones first, then float pre-solve + exact repair
// from random starts). Used when no seed is published for an algebra.
std::optional<RatVec> find_seed(const DiagSystem& sys, const NewtonOptions& opts = {});

}  // namespace nilric
