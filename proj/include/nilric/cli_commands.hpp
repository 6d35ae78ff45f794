#pragma once

#include <string>

#include "nilric/json_io.hpp"

namespace nilric {

enum class OutputFormat { Text, Json };

struct RunConfig {
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  NewtonOptions newton;
  int jobs = 0;  // 0 = library default (all threads when OpenMP is enabled)
};

// Exit codes shared by every subcommand:
//   0 success, 2 validation error, 3 realization incomplete,
//   4 internal invariant violation.
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

CommandResult cmd_catalog_list(const RunConfig& cfg);
CommandResult cmd_catalog_show(const std::string& id, const RunConfig& cfg);

// algebra_spec: catalog id or path to an algebra JSON file.
// metric_spec:  "diag:1,1/2,..." or path to a metric JSON file.
CommandResult cmd_ricci(const std::string& algebra_spec, const std::string& metric_spec,
                        const std::string& basis_change_path, const RunConfig& cfg);

CommandResult cmd_sign_set(const std::string& algebra_spec, const RunConfig& cfg);

// target empty => --all behavior over the whole admissible set.
CommandResult cmd_realize(const std::string& algebra_spec, const std::string& target,
                          bool all, const RunConfig& cfg);

// Recomputes the signature sets and realizes every tabulated target for the
// dim <= 6 catalog; nonzero exit on any mismatch. `override_catalog` lets
// tests inject corrupted data.
CommandResult cmd_table3(const RunConfig& cfg, const Catalog* override_catalog = nullptr);

// Helpers shared with tests.
LieAlgebra load_algebra_spec(const std::string& spec);
Metric load_metric_spec(const std::string& metric_spec, const std::string& basis_change_path,
                        std::size_t dim);

}  // namespace nilric
