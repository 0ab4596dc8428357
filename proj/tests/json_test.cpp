#include <doctest.h>

#include "cyclojones/json_io.hpp"
#include "support.hpp"

using namespace cyclojones;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("polynomial schema") {
  const json j = poly_to_json(parse_poly("t^-2 - t^-1 + 1 - t + t^2"));
  CHECK(j == json::parse(R"({"variable":"t","terms":[[-2,"1"],[-1,"-1"],[0,"1"],[1,"-1"],[2,"1"]]})"));
  CHECK(poly_to_json(LaurentPoly(Variable::A)) == json::parse(R"({"variable":"A","terms":[]})"));
  const LaurentPoly huge = parse_poly("-98765432109876543210987654321A^40");
  CHECK(poly_from_json(poly_to_json(huge)) == huge);
}

TEST_CASE("malformed polynomial JSON") {
  for (const char* bad : {
           R"({"terms":[]})",
           R"({"variable":"x","terms":[]})",
           R"({"variable":"t","terms":{}})",
           R"({"variable":"t","terms":[[1]]})",
           R"({"variable":"t","terms":[[2,"1"],[1,"1"]]})",
           R"({"variable":"t","terms":[[1,"1"],[1,"1"]]})",
           R"({"variable":"t","terms":[[1,"0"]]})",
           R"({"variable":"t","terms":[[1,"1x"]]})",
           R"({"variable":"t","terms":[[1.5,"1"]]})",
           R"([])"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(poly_from_json(json::parse(bad)), ParseError);
  }
}

TEST_CASE("property: polynomial round trip") {
  cyclojones::testing::Gen gen(0x150);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly p = gen.poly(10, 1000, 90, gen.coin() ? Variable::t : Variable::A);
    CHECK(poly_from_json(json::parse(poly_to_json(p).dump())) == p);
  }
}

TEST_CASE("summary schema and round trip") {
  const ArrowDiagramSummary s = wnk_summary({2, 3});
  const json j = summary_to_json(s);
  CHECK(j == json::parse(R"({"bare_writhe":3,"arrows":[[1,0],[1,1],[1,2],[-1,-1],[-1,-1]]})"));
  CHECK(summary_from_json(json::parse(j.dump())) == s);
  CHECK_THROWS_AS(summary_from_json(json::parse(R"({"bare_writhe":0,"arrows":[[0,1]]})")),
                  ParseError);
  CHECK_THROWS_AS(summary_from_json(json::parse(R"({"arrows":[]})")), ParseError);
}

TEST_CASE("table rows") {
  const auto rows = generate_table(4);
  const json first = table_row_to_json(rows[0]);
  CHECK(first["n"] == 0);
  CHECK(first["k"] == 1);
  CHECK(first["family"] == "FamilyKMinus1");
  CHECK(first["m"] == 1);
  CHECK(first["polynomial"] == "1");
  CHECK(first["crossing_bound"] == 1);
  const json last = table_row_to_json(rows[15]);
  CHECK(last["polynomial"] == "Phi_tilde_98");
  CHECK(poly_from_json(last["jones"]) == rows[15].jones);
}

}
