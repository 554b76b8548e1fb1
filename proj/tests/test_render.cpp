#include <doctest.h>

#include <json.hpp>

#include "clifftwist/render.hpp"

using namespace clifftwist;

TEST_CASE("clidata text matches the seven-element list layout") {
  CHECK(render_clidata(make_clidata(make_signature(3, 0)), OutputFormat::text) ==
        "[complex, 2, simple, 1/2 + 1/2 e1, [1, e2, e3, e23], [1, e23], [1, e2]]\n");
  CHECK(render_clidata(make_clidata(make_signature(0, 0)), OutputFormat::text) ==
        "[real, 1, simple, 1, [1], [1], [1]]\n");
}

TEST_CASE("clidata json carries the canonical keys and round-trips") {
  const std::string out =
      render_clidata(make_clidata(make_signature(1, 2)), OutputFormat::json);
  const auto j = nlohmann::ordered_json::parse(out);
  CHECK(j["field"] == "complex");
  CHECK(j["dim"] == 2);
  CHECK(j["type"] == "simple");
  CHECK(j["spinor_basis_K"] == nlohmann::ordered_json::array({"1", "e1"}));
  // Byte-identical round trip through parse + re-dump.
  CHECK(j.dump(2) + "\n" == out);
}

TEST_CASE("groups text shows the published element lists") {
  const std::string out =
      render_groups(make_groups_view(make_signature(1, 1)), OutputFormat::text);
  CHECK(out.find("G(f) = {±1, ±e12}") != std::string::npos);
  CHECK(out.find("T(f) = {±1, ±e12}") != std::string::npos);
  CHECK(out.find("K(f) = {±1}") != std::string::npos);

  const std::string out12 =
      render_groups(make_groups_view(make_signature(1, 2)), OutputFormat::text);
  CHECK(out12.find("K(f) = {±1, ±e2}") != std::string::npos);

  const std::string out00 =
      render_groups(make_groups_view(make_signature(0, 0)), OutputFormat::text);
  CHECK(out00.find("G    = {±1}") != std::string::npos);
}

TEST_CASE("verify rendering counts clauses") {
  const VerifyReport r = verify_signature(make_signature(1, 1), 3);
  const std::string out = render_verify({r}, OutputFormat::text);
  CHECK(out.find("RESULT: PASS") != std::string::npos);
}

TEST_CASE("tables csv has one row per signature") {
  const auto rows = table_sweep(2, ProductKind::tp);
  const std::string csv = render_tables(rows, ProductKind::tp, 2, OutputFormat::csv);
  // header + 6 signatures with p+q <= 2
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 7);
  CHECK(csv.find("0,0,0,1,R,O(1),beta+;beta-") != std::string::npos);
  CHECK(csv.find("1,1,1,2,R,O(2),") != std::string::npos);
  CHECK(csv.find("2,0,1,2,R,O(2),beta+") != std::string::npos);
  CHECK(csv.find("0,2,0,1,H,Sp(1),beta-") != std::string::npos);
}

TEST_CASE("all json reports round-trip byte-identically") {
  auto roundtrips = [](const std::string& out) {
    return nlohmann::ordered_json::parse(out).dump(2) + "\n" == out;
  };
  CHECK(roundtrips(render_clidata(make_clidata(make_signature(2, 1)), OutputFormat::json)));
  CHECK(roundtrips(render_groups(make_groups_view(make_signature(1, 2)), OutputFormat::json)));
  CHECK(roundtrips(render_verify({verify_signature(make_signature(1, 1), 5)},
                                 OutputFormat::json)));
  CHECK(roundtrips(render_tables(table_sweep(2, ProductKind::beta_plus),
                                 ProductKind::beta_plus, 2, OutputFormat::json)));
}

TEST_CASE("format and product parsing reject junk") {
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  CHECK_THROWS_AS(parse_product("gamma"), std::invalid_argument);
  CHECK(parse_product("beta+") == ProductKind::beta_plus);
}
