#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "nilric/cli_commands.hpp"

namespace {

nilric::OutputFormat parse_format(const std::string& s) {
  if (s == "json") return nilric::OutputFormat::Json;
  if (s == "text") return nilric::OutputFormat::Text;
  throw CLI::ValidationError("--format must be 'json' or 'text'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ricci signatures of left-invariant metrics on nilpotent Lie groups"};
  app.require_subcommand(1);

  std::string format = "text";
  if (const char* env = std::getenv("NILRIC_FORMAT")) format = env;
  nilric::RunConfig cfg;
  app.add_option("--format", format, "output format: text or json")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--newton-max-iters", cfg.newton.max_iterations, "Newton iteration cap")
      ->capture_default_str();
  std::string eps_ladder;
  app.add_option("--newton-eps", eps_ladder,
                 "comma-separated magnitude ladder for the sign targets, e.g. 1/4,1/16,1/64");
  app.add_option("--jobs", cfg.jobs, "worker threads for table sweeps (0 = all)")
      ->capture_default_str();

  auto* cat = app.add_subcommand("catalog", "list or show built-in algebras");
  cat->require_subcommand(1);
  cat->fallthrough();
  auto* cat_list = cat->add_subcommand("list", "list catalog ids");
  cat_list->fallthrough();
  std::string show_id;
  auto* cat_show = cat->add_subcommand("show", "show one entry");
  cat_show->fallthrough();
  cat_show->add_option("id", show_id, "catalog id, e.g. L6_11 or m0(7)")->required();

  std::string algebra, metric = "diag:", basis_change, target;
  auto* ricci = app.add_subcommand("ricci", "Ricci form, reduction and signature");
  ricci->fallthrough();
  ricci->add_option("--algebra", algebra, "catalog id or algebra JSON file")->required();
  ricci->add_option("--metric", metric, "metric JSON file or diag:a1,a2,...")->required();
  ricci->add_option("--basis-change", basis_change, "JSON file with a basis matrix");

  auto* sgn = app.add_subcommand("sign-set", "admissible signature set of an algebra");
  sgn->fallthrough();
  sgn->add_option("--algebra", algebra, "catalog id or algebra JSON file")->required();

  bool all = false;
  auto* real = app.add_subcommand("realize", "certified metrics for target signatures");
  real->fallthrough();
  real->add_option("--algebra", algebra, "catalog id or algebra JSON file")->required();
  real->add_option("--target", target, "signature as s-,s0,s+");
  real->add_flag("--all", all, "realize the whole admissible set");

  auto* table = app.add_subcommand("table3", "recompute and verify the full catalog");
  table->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.format = parse_format(format);
    if (!eps_ladder.empty()) {
      cfg.newton.eps_ladder.clear();
      std::stringstream ss(eps_ladder);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.newton.eps_ladder.push_back(nilric::rat_parse(item));
    }
    nilric::CommandResult result;
    if (cat_list->parsed())
      result = nilric::cmd_catalog_list(cfg);
    else if (cat_show->parsed())
      result = nilric::cmd_catalog_show(show_id, cfg);
    else if (ricci->parsed())
      result = nilric::cmd_ricci(algebra, metric, basis_change, cfg);
    else if (sgn->parsed())
      result = nilric::cmd_sign_set(algebra, cfg);
    else if (real->parsed())
      result = nilric::cmd_realize(algebra, target, all || target.empty(), cfg);
    else if (table->parsed())
      result = nilric::cmd_table3(cfg);
    std::cout << result.output;
    return result.exit_code;
  } catch (const nilric::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const nilric::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nilric::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
