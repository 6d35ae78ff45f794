#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilric/realize.hpp"

namespace nilric {

// One catalog algebra: structure constants, the tabulated admissible
// signature set, and whatever realization data is published for it (an
// ordered nice basis with a certified seed, and/or explicit recipe bases).
// Seeds are stored in coordinates of the attached basis.
struct CatalogEntry {
  std::string id;
  LieAlgebra algebra;
  std::set<SignatureTriple> expected_signatures;
  std::optional<RatMat> nice_basis;
  std::optional<RatVec> nice_seed;
  std::optional<std::vector<Quad>> published_seed;  // may involve sqrt(2)
  std::vector<Recipe> recipes;
  std::string note;
};

class Catalog {
 public:
  static const Catalog& instance();
  explicit Catalog(const std::string& json_text);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<std::string> ids() const;
  // Fixed entries only; nullptr when unknown.
  const CatalogEntry* find(const std::string& id) const;
  // Also understands the generated filiform family "m0(n)". Throws
  // ValidationError for unknown ids.
  CatalogEntry resolve(const std::string& id) const;
  std::vector<const CatalogEntry*> expand_family(const std::string& prefix) const;

 private:
  std::vector<CatalogEntry> entries_;
};

// The graded filiform algebra [x1, xi] = x_{i+1}, its nice basis
// (x_n, x_3..x_{n-1}, x_1, x_2), the all-ones seed and its signature set.
CatalogEntry make_filiform_entry(std::size_t n);

RealizationPlan plan_for(const CatalogEntry& entry);

const char* embedded_catalog_json();

}  // namespace nilric
