#include "nilric/cli_commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilric {

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string triple_list(const std::set<SignatureTriple>& ts) {
  std::string s;
  for (const SignatureTriple& t : ts) s += (s.empty() ? "" : " ") + t.str();
  return s;
}

struct TableRow {
  std::string id;
  bool sign_set_ok = false;
  bool realization_ok = false;
  std::set<SignatureTriple> expected;
  std::set<SignatureTriple> computed;
  std::vector<RealizationCertificate> certificates;
  std::vector<UnrealizedTarget> unrealized;
  std::string error;
};

TableRow run_table_row(const CatalogEntry& entry, const RunConfig& cfg) {
  TableRow row;
  row.id = entry.id;
  row.expected = entry.expected_signatures;
  try {
    SignSet live = sign_set(dimension_profile(entry.algebra));
    row.computed = live.triples;
    row.sign_set_ok = row.computed == row.expected;
    NewtonOptions newton = cfg.newton;
    newton.random_seed = cfg.seed;
    RealizationOutcome outcome = realize_all(plan_for(entry), newton);
    row.certificates = std::move(outcome.certificates);
    row.unrealized = std::move(outcome.unrealized);
    std::set<SignatureTriple> realized;
    for (const RealizationCertificate& c : row.certificates) realized.insert(c.achieved);
    row.realization_ok = row.unrealized.empty() && realized == row.expected;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

LieAlgebra load_algebra_spec(const std::string& spec) {
  if (std::filesystem::exists(spec)) return algebra_from_json(load_json_file(spec));
  return Catalog::instance().resolve(spec).algebra;
}

Metric load_metric_spec(const std::string& metric_spec, const std::string& basis_change_path,
                        std::size_t dim) {
  std::optional<RatMat> basis;
  if (!basis_change_path.empty()) {
    Json bj = load_json_file(basis_change_path);
    basis = matrix_from_json(bj.contains("basis_change") ? bj["basis_change"] : bj);
  }
  if (metric_spec.rfind("diag:", 0) == 0) {
    RatVec d;
    std::stringstream ss(metric_spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) d.push_back(rat_parse(item));
    if (d.size() != dim)
      throw ValidationError("diagonal metric has " + std::to_string(d.size()) +
                            " entries for a dimension-" + std::to_string(dim) + " algebra");
    return basis ? Metric::from_diagonal_on_basis(d, *basis) : Metric::from_diagonal(d);
  }
  Json j = load_json_file(metric_spec);
  if (basis) j["basis_change"] = matrix_to_json(*basis);
  return metric_from_json(j, dim);
}

CommandResult cmd_catalog_list(const RunConfig& cfg) {
  const Catalog& cat = Catalog::instance();
  if (cfg.format == OutputFormat::Json) {
    Json j;
    j["algebras"] = cat.ids();
    j["families"] = Json::array({"m0(n)"});
    return {0, dump(j)};
  }
  std::ostringstream os;
  for (const CatalogEntry& e : cat.entries()) {
    os << e.id << "  dim " << e.algebra.dim() << "  signatures " << e.expected_signatures.size()
       << "\n";
  }
  os << "m0(n)  graded filiform family, pass e.g. m0(7)\n";
  return {0, os.str()};
}

CommandResult cmd_catalog_show(const std::string& id, const RunConfig& cfg) {
  CatalogEntry entry = Catalog::instance().resolve(id);
  if (cfg.format == OutputFormat::Json) {
    Json j = algebra_to_json(entry.algebra);
    j["id"] = entry.id;
    Json expected = Json::array();
    for (const SignatureTriple& t : entry.expected_signatures)
      expected.push_back(signature_to_json(t));
    j["expected_signatures"] = std::move(expected);
    if (entry.nice_basis) j["nice_basis"] = matrix_to_json(*entry.nice_basis);
    if (entry.nice_seed) {
      Json seed = Json::array();
      for (const Rat& v : *entry.nice_seed) seed.push_back(rat_str(v));
      j["nice_seed"] = std::move(seed);
    }
    return {0, dump(j)};
  }
  std::ostringstream os;
  os << entry.id << "  (dim " << entry.algebra.dim() << ")\n";
  for (const auto& [pair, rhs] : entry.algebra.stored_brackets()) {
    os << "  [e" << pair.first << ",e" << pair.second << "] =";
    bool first = true;
    for (const auto& [k, c] : rhs) {
      os << (first ? " " : " + ");
      if (c != 1) os << rat_str(c) << "*";
      os << "e" << k;
      first = false;
    }
    os << "\n";
  }
  if (!entry.expected_signatures.empty())
    os << "  signatures: " << triple_list(entry.expected_signatures) << "\n";
  if (entry.note.size()) os << "  note: " << entry.note << "\n";
  return {0, os.str()};
}

CommandResult cmd_ricci(const std::string& algebra_spec, const std::string& metric_spec,
                        const std::string& basis_change_path, const RunConfig& cfg) {
  LieAlgebra a = load_algebra_spec(algebra_spec);
  Metric g = load_metric_spec(metric_spec, basis_change_path, a.dim());
  RicciSignatureResult res = ricci_signature(a, g);
  SignatureTriple under = signature_underestimate(a, g);
  if (cfg.format == OutputFormat::Json) {
    Json j;
    j["algebra"] = algebra_spec;
    j["signature"] = signature_to_json(res.signature);
    j["splitting"] = {{"n1", res.reduced.n1},
                      {"n2", res.reduced.n2},
                      {"n3", res.reduced.n3},
                      {"n4", res.reduced.n4}};
    j["ricci_form"] = matrix_to_json(res.ric);
    j["reduced"] = matrix_to_json(res.reduced.blocks.R);
    j["witness"] = {{"p", res.reduced.n3},
                    {"m", signature_to_json(res.reduced.reduced_signature)}};
    j["underestimate"] = signature_to_json(under);
    return {0, dump(j)};
  }
  std::ostringstream os;
  os << "signature      " << res.signature.str() << "\n";
  os << "splitting      n1=" << res.reduced.n1 << " n2=" << res.reduced.n2
     << " n3=" << res.reduced.n3 << " n4=" << res.reduced.n4 << "\n";
  os << "underestimate  " << under.str() << "\n";
  os << "witness        p=" << res.reduced.n3 << " m=" << res.reduced.reduced_signature.str()
     << "\n";
  os << "ricci form\n" << res.ric.str() << "\n";
  os << "reduced matrix\n" << res.reduced.blocks.R.str() << "\n";
  return {0, os.str()};
}

CommandResult cmd_sign_set(const std::string& algebra_spec, const RunConfig& cfg) {
  LieAlgebra a = load_algebra_spec(algebra_spec);
  DimensionProfile profile = dimension_profile(a);
  SignSet s = sign_set(profile);
  if (cfg.format == OutputFormat::Json) {
    Json j;
    j["algebra"] = algebra_spec;
    j["profile"] = {{"n", profile.n}, {"d", profile.d}, {"k", profile.k}, {"l", profile.ell}};
    Json triples = Json::array();
    for (const SignatureTriple& t : s.triples) triples.push_back(signature_to_json(t));
    j["signatures"] = std::move(triples);
    return {0, dump(j)};
  }
  std::ostringstream os;
  os << "profile (n,d,k,l) = (" << profile.n << "," << profile.d << "," << profile.k << ","
     << profile.ell << ")\n";
  os << "admissible signatures: " << triple_list(s.triples) << "\n";
  return {0, os.str()};
}

CommandResult cmd_realize(const std::string& algebra_spec, const std::string& target, bool all,
                          const RunConfig& cfg) {
  const Catalog& cat = Catalog::instance();
  std::optional<CatalogEntry> entry;
  if (!std::filesystem::exists(algebra_spec)) entry = cat.resolve(algebra_spec);
  LieAlgebra a = entry ? entry->algebra : load_algebra_spec(algebra_spec);
  DimensionProfile profile = dimension_profile(a);
  SignSet admissible = sign_set(profile);
  RealizationPlan plan =
      entry ? plan_for(*entry) : RealizationPlan{algebra_spec, a, {}, {}};
  NewtonOptions newton = cfg.newton;
  newton.random_seed = cfg.seed;

  std::vector<RealizationCertificate> certificates;
  std::vector<UnrealizedTarget> unrealized;
  if (!all && !target.empty()) {
    SignatureTriple t;
    if (std::sscanf(target.c_str(), "%d,%d,%d", &t.neg, &t.zero, &t.pos) != 3)
      throw ValidationError("target must be given as s-,s0,s+");
    if (!admissible.triples.count(t))
      throw ValidationError("target " + t.str() +
                            " lies outside the admissible signature set { " +
                            triple_list(admissible.triples) + " }");
    RealizationOutcome outcome = realize_all(plan, newton);
    for (RealizationCertificate& c : outcome.certificates)
      if (c.target == t) certificates.push_back(std::move(c));
    if (certificates.empty()) {
      std::string reason = "no registered strategy produced a certificate";
      for (UnrealizedTarget& u : outcome.unrealized)
        if (u.target == t) reason = u.reason;
      unrealized.push_back(UnrealizedTarget{t, std::move(reason)});
    }
  } else {
    RealizationOutcome outcome = realize_all(plan, newton);
    certificates = std::move(outcome.certificates);
    unrealized = std::move(outcome.unrealized);
  }

  int exit_code = unrealized.empty() ? 0 : 3;
  if (cfg.format == OutputFormat::Json) {
    Json j;
    j["algebra"] = algebra_spec;
    Json certs = Json::array();
    for (const RealizationCertificate& c : certificates) certs.push_back(certificate_to_json(c));
    j["certificates"] = std::move(certs);
    Json un = Json::array();
    for (const UnrealizedTarget& u : unrealized) {
      Json e;
      e["target"] = signature_to_json(u.target);
      e["reason"] = u.reason;
      un.push_back(std::move(e));
    }
    j["unrealized"] = std::move(un);
    return {exit_code, dump(j)};
  }
  std::ostringstream os;
  for (const RealizationCertificate& c : certificates) {
    os << c.achieved.str() << "  " << c.method << "  ";
    if (c.metric.diag_presentation()) {
      os << "diag" << vec_str(*c.metric.diag_presentation());
      if (c.metric.basis_change()) os << " on the stored basis";
    } else {
      os << "gram metric";
    }
    os << "\n";
  }
  for (const UnrealizedTarget& u : unrealized)
    os << u.target.str() << "  UNREALIZED  (" << u.reason << ")\n";
  return {exit_code, os.str()};
}

CommandResult cmd_table3(const RunConfig& cfg, const Catalog* override_catalog) {
  const Catalog& cat = override_catalog ? *override_catalog : Catalog::instance();
  std::vector<const CatalogEntry*> entries;
  for (const CatalogEntry& e : cat.entries())
    if (e.algebra.dim() <= 6) entries.push_back(&e);
  std::vector<TableRow> rows(entries.size());

#ifdef _OPENMP
  if (cfg.jobs != 1) {
    int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < entries.size(); ++i) rows[i] = run_table_row(*entries[i], cfg);
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) rows[i] = run_table_row(*entries[i], cfg);
  }
#else
  for (std::size_t i = 0; i < entries.size(); ++i) rows[i] = run_table_row(*entries[i], cfg);
#endif

  bool all_ok = true;
  for (const TableRow& r : rows) all_ok = all_ok && r.sign_set_ok && r.realization_ok;

  if (cfg.format == OutputFormat::Json) {
    Json j;
    Json out_rows = Json::array();
    for (const TableRow& r : rows) {
      Json row;
      row["id"] = r.id;
      row["sign_set_ok"] = r.sign_set_ok;
      row["realization_ok"] = r.realization_ok;
      Json expected = Json::array(), computed = Json::array();
      for (const SignatureTriple& t : r.expected) expected.push_back(signature_to_json(t));
      for (const SignatureTriple& t : r.computed) computed.push_back(signature_to_json(t));
      row["expected"] = std::move(expected);
      row["computed"] = std::move(computed);
      Json methods = Json::object();
      for (const RealizationCertificate& c : r.certificates)
        methods[c.achieved.str()] = c.method;
      row["methods"] = std::move(methods);
      Json un = Json::array();
      for (const UnrealizedTarget& u : r.unrealized) {
        Json e;
        e["target"] = signature_to_json(u.target);
        e["reason"] = u.reason;
        un.push_back(std::move(e));
      }
      row["unrealized"] = std::move(un);
      if (!r.error.empty()) row["error"] = r.error;
      out_rows.push_back(std::move(row));
    }
    j["rows"] = std::move(out_rows);
    j["pass"] = all_ok;
    return {all_ok ? 0 : 3, dump(j)};
  }

  std::ostringstream os;
  for (const TableRow& r : rows) {
    bool ok = r.sign_set_ok && r.realization_ok;
    os << (ok ? "PASS  " : "FAIL  ") << r.id;
    if (!r.sign_set_ok) os << "  [sign set: expected " << triple_list(r.expected) << " computed "
                           << triple_list(r.computed) << "]";
    if (!r.unrealized.empty()) {
      os << "  [unrealized:";
      for (const UnrealizedTarget& u : r.unrealized)
        os << " " << u.target.str() << " (" << u.reason << ")";
      os << "]";
    }
    if (!r.error.empty()) os << "  [error: " << r.error << "]";
    os << "\n";
  }
  os << (all_ok ? "ALL ROWS PASS" : "FAILURES PRESENT") << "\n";
  return {all_ok ? 0 : 3, os.str()};
}

}  // namespace nilric
