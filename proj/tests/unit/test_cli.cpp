#include <doctest.h>

#include <sstream>

#include "nilric/cli_commands.hpp"

using namespace nilric;

namespace {

RunConfig text_cfg() { return RunConfig{}; }

RunConfig json_cfg() {
  RunConfig cfg;
  cfg.format = OutputFormat::Json;
  return cfg;
}

}  // namespace

TEST_CASE("catalog listing") {
  CommandResult r = cmd_catalog_list(text_cfg());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("L6_11") != std::string::npos);
  CHECK(r.output.find("m0(n)") != std::string::npos);
  std::size_t lines = std::count(r.output.begin(), r.output.end(), '\n');
  CHECK(lines >= 40);

  CommandResult shown = cmd_catalog_show("L6_11", text_cfg());
  CHECK(shown.output.find("[e2,e5] = e6") != std::string::npos);
  CommandResult fam = cmd_catalog_show("m0(9)", text_cfg());
  CHECK(fam.output.find("[e8,e9]") == std::string::npos);
  CHECK(fam.output.find("[e1,e8] = e9") != std::string::npos);
  CHECK_THROWS_AS(cmd_catalog_show("nope", text_cfg()), ValidationError);
}

TEST_CASE("ricci command") {
  CommandResult r = cmd_ricci("L3_2", "diag:1,1,1", "", text_cfg());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(2,0,1)") != std::string::npos);
  CHECK(r.output.find("-1/2") != std::string::npos);

  CommandResult j = cmd_ricci("L6_11", "diag:1,1,1,1,1,1", "", json_cfg());
  Json parsed = Json::parse(j.output);
  CHECK(parsed["signature"] == Json::array({3, 2, 1}));
  CHECK(parsed["reduced"][0][0].get<std::string>() == "0");
  CHECK(parsed["splitting"]["n2"] == 2);
  // every printed rational parses back
  for (const Json& row : parsed["ricci_form"])
    for (const Json& v : row) CHECK_NOTHROW(rat_parse(v.get<std::string>()));

  CHECK_THROWS_AS(cmd_ricci("L3_2", "diag:1,1", "", text_cfg()), ValidationError);
  CHECK_THROWS_AS(cmd_ricci("L3_2", "diag:1,-1,1", "", text_cfg()), ValidationError);
}

TEST_CASE("sign-set command") {
  CommandResult j = cmd_sign_set("L6_26", json_cfg());
  Json parsed = Json::parse(j.output);
  CHECK(parsed["signatures"] == Json::parse("[[3,0,3]]"));
  CommandResult t = cmd_sign_set("L5_3", text_cfg());
  CHECK(t.output.find("(4,0,1)") != std::string::npos);
}

TEST_CASE("realize command") {
  // a target outside the admissible set is rejected with an explanation
  CHECK_THROWS_WITH_AS(cmd_realize("L3_2", "1,1,1", false, text_cfg()),
                       doctest::Contains("outside the admissible signature set"),
                       ValidationError);

  CommandResult one = cmd_realize("L3_2", "2,0,1", false, json_cfg());
  CHECK(one.exit_code == 0);
  Json parsed = Json::parse(one.output);
  REQUIRE(parsed["certificates"].size() == 1);
  CHECK(parsed["certificates"][0]["achieved"] == Json::array({2, 0, 1}));

  CommandResult all = cmd_realize("L6_6", "", true, json_cfg());
  CHECK(all.exit_code == 3);  // one tabulated target is unrealizable
  Json pall = Json::parse(all.output);
  CHECK(pall["certificates"].size() == 8);
  REQUIRE(pall["unrealized"].size() == 1);
  CHECK(pall["unrealized"][0]["target"] == Json::array({5, 0, 1}));
}

TEST_CASE("table sweep and deterministic output") {
  RunConfig cfg = json_cfg();
  cfg.jobs = 1;
  CommandResult a = cmd_table3(cfg);
  CommandResult b = cmd_table3(cfg);
  CHECK(a.output == b.output);  // byte-identical for fixed inputs and seed

  Json parsed = Json::parse(a.output);
  CHECK(parsed["rows"].size() == 44);  // dim <= 6 catalog
  int sign_ok = 0;
  for (const Json& row : parsed["rows"])
    if (row["sign_set_ok"].get<bool>()) sign_ok++;
  CHECK(sign_ok == 44);

  // corrupting a stored row surfaces as FAIL
  Json doc = Json::parse(embedded_catalog_json());
  doc["algebras"][0]["expected_signatures"] = Json::parse("[[1,1,1]]");
  Catalog corrupted(doc.dump());
  CommandResult bad = cmd_table3(text_cfg(), &corrupted);
  CHECK(bad.exit_code != 0);
  CHECK(bad.output.find("FAIL  L3_2") != std::string::npos);
}

TEST_CASE("metric loading") {
  LieAlgebra a = load_algebra_spec("L5_7");
  CHECK(a.dim() == 5);
  Metric m = load_metric_spec("diag:1,2,1/3,1,7/5", "", 5);
  CHECK(m.gram()(2, 2) == Rat(1, 3));
  CHECK_THROWS_AS(load_metric_spec("diag:1,2", "", 5), ValidationError);
  CHECK_THROWS_AS(load_algebra_spec("no_such_algebra"), ValidationError);
}
