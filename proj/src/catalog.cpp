#include "nilric/catalog.hpp"

#include <algorithm>

#include "nilric/json_io.hpp"

namespace nilric {

Catalog::Catalog(const std::string& json_text) {
  Json doc = Json::parse(json_text);
  for (const Json& e : doc.at("algebras")) entries_.push_back(catalog_entry_from_json(e));
}

const Catalog& Catalog::instance() {
  static Catalog catalog(embedded_catalog_json());
  return catalog;
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const CatalogEntry& e : entries_) out.push_back(e.id);
  return out;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const CatalogEntry& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

CatalogEntry Catalog::resolve(const std::string& id) const {
  if (const CatalogEntry* e = find(id)) return *e;
  if (id.rfind("m0(", 0) == 0 && id.back() == ')') {
    std::size_t n = 0;
    try {
      n = std::stoul(id.substr(3, id.size() - 4));
    } catch (...) {
      throw ValidationError("bad filiform id '" + id + "'");
    }
    if (n < 3 || n > 40) throw ValidationError("filiform dimension out of range in '" + id + "'");
    return make_filiform_entry(n);
  }
  throw ValidationError("unknown catalog id '" + id + "'");
}

std::vector<const CatalogEntry*> Catalog::expand_family(const std::string& prefix) const {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : entries_)
    if (e.id.rfind(prefix, 0) == 0) out.push_back(&e);
  return out;
}

CatalogEntry make_filiform_entry(std::size_t n) {
  if (n < 3) throw ValidationError("filiform algebras need dimension >= 3");
  std::vector<std::tuple<int, int, int, Rat>> brackets;
  for (std::size_t i = 2; i <= n - 1; ++i)
    brackets.emplace_back(1, static_cast<int>(i), static_cast<int>(i + 1), Rat(1));
  LieAlgebra algebra = algebra_from_simple_brackets(n, brackets);
  // Signature set: (2+m-, m0, 1+m+) over compositions of n-3.
  std::set<SignatureTriple> expected;
  for (int mn = 0; mn <= static_cast<int>(n) - 3; ++mn)
    for (int mz = 0; mn + mz <= static_cast<int>(n) - 3; ++mz)
      expected.insert(
          SignatureTriple{2 + mn, mz, 1 + (static_cast<int>(n) - 3 - mn - mz)});
  // Ordered basis (x_n, x_3 .. x_{n-1}, x_1, x_2).
  std::vector<RatVec> cols;
  auto unit = [n](std::size_t i) {
    RatVec v(n, Rat(0));
    v[i] = 1;
    return v;
  };
  cols.push_back(unit(n - 1));
  for (std::size_t i = 2; i < n - 1; ++i) cols.push_back(unit(i));
  cols.push_back(unit(0));
  cols.push_back(unit(1));
  RatMat basis = RatMat::from_columns(cols, n);
  RatVec seed(n, Rat(1));
  return CatalogEntry{"m0(" + std::to_string(n) + ")",
                      std::move(algebra),
                      std::move(expected),
                      std::move(basis),
                      std::move(seed),
                      std::nullopt,
                      {},
                      "graded filiform family"};
}

RealizationPlan plan_for(const CatalogEntry& entry) {
  RealizationPlan plan{entry.id, entry.algebra, {}, entry.recipes};
  if (entry.nice_basis && entry.nice_seed)
    plan.systems.push_back(DiagSystemStrategy{*entry.nice_basis, *entry.nice_seed});
  return plan;
}

}  // namespace nilric
