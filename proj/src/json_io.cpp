#include "nilric/json_io.hpp"

namespace nilric {

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
    throw ValidationError("algebra file needs a positive integer 'dim'");
  std::size_t dim = j["dim"].get<std::size_t>();
  std::map<std::pair<int, int>, std::map<int, Rat>> brackets;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ValidationError("'brackets' must be an array");
    for (const Json& b : j["brackets"]) {
      if (!b.contains("i") || !b.contains("j") || !b.contains("rhs"))
        throw ValidationError("bracket entries need 'i', 'j' and 'rhs'");
      int i = b["i"].get<int>(), jj = b["j"].get<int>();
      if (i >= jj) throw ValidationError("bracket indices must satisfy i < j (got [" +
                                         std::to_string(i) + "," + std::to_string(jj) + "])");
      if (brackets.count({i, jj}))
        throw ValidationError("duplicate bracket for pair [" + std::to_string(i) + "," +
                              std::to_string(jj) + "]");
      std::map<int, Rat> rhs;
      for (const auto& [key, val] : b["rhs"].items()) {
        int k = std::stoi(key);
        rhs[k] = rat_parse(val.get<std::string>());
      }
      brackets[{i, jj}] = std::move(rhs);
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return LieAlgebra(dim, std::move(brackets), std::move(labels));
}

Json algebra_to_json(const LieAlgebra& a) {
  Json j;
  j["dim"] = a.dim();
  Json brackets = Json::array();
  for (const auto& [pair, rhs] : a.stored_brackets()) {
    Json entry;
    entry["i"] = pair.first;
    entry["j"] = pair.second;
    Json r = Json::object();
    for (const auto& [k, c] : rhs) r[std::to_string(k)] = rat_str(c);
    entry["rhs"] = std::move(r);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

RatMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a nonempty array of rows");
  std::size_t rows = j.size(), cols = j[0].size();
  RatMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rat_parse(j[r][c].get<std::string>());
  }
  return m;
}

Json matrix_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Metric metric_from_json(const Json& j, std::size_t dim) {
  std::optional<RatMat> basis;
  if (j.contains("basis_change")) basis = matrix_from_json(j["basis_change"]);
  if (basis && (basis->rows() != dim || basis->cols() != dim))
    throw ValidationError("basis_change must be a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " matrix");
  if (j.contains("diag")) {
    RatVec d;
    for (const Json& v : j["diag"]) d.push_back(rat_parse(v.get<std::string>()));
    if (d.size() != dim) throw ValidationError("diagonal metric length mismatch");
    return basis ? Metric::from_diagonal_on_basis(d, *basis) : Metric::from_diagonal(d);
  }
  if (j.contains("gram")) {
    RatMat g = matrix_from_json(j["gram"]);
    if (g.rows() != dim || g.cols() != dim) throw ValidationError("Gram matrix size mismatch");
    return basis ? Metric::from_gram_on_basis(g, *basis) : Metric::from_gram(std::move(g));
  }
  throw ValidationError("metric file needs 'diag' or 'gram'");
}

Json metric_to_json(const Metric& m) {
  Json j;
  if (m.diag_presentation()) {
    Json d = Json::array();
    for (const Rat& v : *m.diag_presentation()) d.push_back(rat_str(v));
    j["diag"] = std::move(d);
  } else {
    j["gram"] = matrix_to_json(m.gram());
  }
  if (m.basis_change()) j["basis_change"] = matrix_to_json(*m.basis_change());
  if (m.diag_presentation() && m.basis_change()) j["gram_standard"] = matrix_to_json(m.gram());
  return j;
}

Json signature_to_json(const SignatureTriple& s) { return Json::array({s.neg, s.zero, s.pos}); }

Json certificate_to_json(const RealizationCertificate& c) {
  Json j;
  j["algebra"] = c.algebra_id;
  j["target"] = signature_to_json(c.target);
  j["achieved"] = signature_to_json(c.achieved);
  j["method"] = c.method;
  j["metric"] = metric_to_json(c.metric);
  j["reduced"] = matrix_to_json(c.reduced);
  return j;
}

namespace {

RatVec rat_vector_from_json(const Json& j) {
  RatVec v;
  for (const Json& x : j) v.push_back(rat_parse(x.get<std::string>()));
  return v;
}

}  // namespace

CatalogEntry catalog_entry_from_json(const Json& j) {
  if (!j.contains("id")) throw ValidationError("catalog entry without id");
  LieAlgebra algebra = algebra_from_json(j);
  std::set<SignatureTriple> expected;
  if (j.contains("expected_signatures"))
    for (const Json& t : j["expected_signatures"])
      expected.insert(SignatureTriple{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  CatalogEntry entry{j["id"].get<std::string>(), std::move(algebra), std::move(expected),
                     std::nullopt,               std::nullopt,       std::nullopt,
                     {},                         ""};
  std::size_t n = entry.algebra.dim();
  auto basis_from = [&](const Json& vectors) {
    std::vector<RatVec> cols;
    for (const Json& v : vectors) cols.push_back(rat_vector_from_json(v));
    RatMat m = RatMat::from_columns(cols, n);
    if (m.cols() != n) throw ValidationError("basis of entry " + entry.id + " has wrong size");
    return m;
  };
  if (j.contains("nice_basis")) entry.nice_basis = basis_from(j["nice_basis"]);
  if (j.contains("nice_seed")) entry.nice_seed = rat_vector_from_json(j["nice_seed"]);
  if (j.contains("published_seed")) {
    std::vector<Quad> seed;
    for (const Json& x : j["published_seed"]) seed.push_back(quad_parse(x.get<std::string>()));
    entry.published_seed = std::move(seed);
  }
  if (j.contains("recipes")) {
    for (const Json& r : j["recipes"]) {
      Recipe recipe;
      recipe.basis = basis_from(r["basis"]);
      recipe.base_diag = rat_vector_from_json(r["base_diag"]);
      if (recipe.base_diag.size() != n)
        throw ValidationError("recipe base_diag of entry " + entry.id + " has wrong length");
      for (const Json& s : r["slots"]) {
        Recipe::Slot slot;
        int pos = s["pos"].get<int>();
        if (pos < 1 || pos > static_cast<int>(n))
          throw ValidationError("recipe slot position out of range in " + entry.id);
        slot.pos = static_cast<std::size_t>(pos - 1);
        slot.ladder = rat_vector_from_json(s["ladder"]);
        recipe.slots.push_back(std::move(slot));
      }
      entry.recipes.push_back(std::move(recipe));
    }
  }
  if (j.contains("note")) entry.note = j["note"].get<std::string>();
  return entry;
}

}  // namespace nilric
