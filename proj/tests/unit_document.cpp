// Fixture document serialization: scalar encodings, full round-trips, schema
// rejection and named-reference resolution.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "ramdepth/document.hpp"
#include "ramdepth/fixtures.hpp"

using namespace ramdepth;

namespace {

struct HasCode : Catch::Matchers::MatcherGenericBase {
  std::string code;
  explicit HasCode(std::string c) : code(std::move(c)) {}
  bool match(const Error& e) const { return e.code() == code; }
  std::string describe() const override { return "has error code " + code; }
};

// A document exercising every section: group, filtration, characters,
// subgroup characters, both parameter kinds, segments and expectations.
FixtureDocument full_document() {
  GaloisFixture sf = s3_fixture();
  FixtureDocument doc;
  doc.name = "roundtrip_probe";
  doc.fg = sf.fg;
  doc.subchars = sf.subchars;
  doc.characters.emplace_back("ind", induce(sf.subchars[0].second));

  ParameterSpec mono;
  mono.name = "mono";
  mono.kind = "monomial";
  mono.summands.push_back(ParameterSummandSpec{"induced", "xi3", 1, 1, 1});
  doc.parameters.push_back(mono);

  ParameterSpec wd;
  wd.name = "wd_mix";
  wd.kind = "wd";
  wd.summands.push_back(ParameterSummandSpec{"finite_orbit", "ind", 1, 1, 1});
  wd.summands.push_back(ParameterSummandSpec{"unramified", "", 2, 1, 1});
  wd.summands.push_back(ParameterSummandSpec{"ramified_symbol", "", 1, 3, 2});
  doc.parameters.push_back(wd);

  EssL2Datum seg;
  seg.form = InnerForm{2, 2, 1};
  seg.sigma = CuspidalDatum{1, Rat(0), 2, true};
  seg.b = 1;
  doc.segments.push_back(seg);

  doc.expect["degree/ind"] = Json{{"value", 2}, {"provenance", "index times degree"}};
  doc.expect["phi/2"] = Json{{"value", rat_to_json(make_rat(4, 3))},
                             {"provenance", "slope sums over [6, 3, 3, 1]"}};
  return doc;
}

}  // namespace

TEST_CASE("rational and cyclotomic json forms") {
  REQUIRE(rat_to_json(Rat(5)).is_number_integer());
  REQUIRE(rat_to_json(Rat(5)).get<long>() == 5);
  REQUIRE(rat_from_json(Json(7)) == Rat(7));
  Json half = rat_to_json(make_rat(-1, 2));
  REQUIRE(half["num"].get<long>() == -1);
  REQUIRE(half["den"].get<long>() == 2);
  REQUIRE(rat_from_json(half) == make_rat(-1, 2));
  REQUIRE_THROWS_MATCHES(rat_from_json(Json("x")), Error, HasCode("SchemaError"));
  REQUIRE_THROWS_MATCHES(rat_from_json(Json::parse(R"({"num": 1})")), Error,
                         HasCode("SchemaError"));
  REQUIRE_THROWS_MATCHES(rat_from_json(Json::parse(R"({"num": "a", "den": 2})")),
                         Error, HasCode("SchemaError"));

  REQUIRE(cyc_to_json(Cyc(make_rat(1, 2)))["num"].get<long>() == 1);
  Cyc mixed = Cyc::root_of_unity(8, 1) + Cyc(2) * Cyc::root_of_unity(8, 3);
  Json mj = cyc_to_json(mixed);
  REQUIRE(mj["N"].get<long>() == 8);
  REQUIRE(mj["coeffs"].size() == 8);
  REQUIRE(cyc_from_json(mj) == mixed);
  REQUIRE(cyc_from_json(cyc_to_json(Cyc::root_of_unity(4, 1))) ==
          Cyc::root_of_unity(4, 1));
  REQUIRE(cyc_from_json(Json(3)) == Cyc(3));
  REQUIRE_THROWS_MATCHES(cyc_from_json(Json::parse(R"({"N": 0, "coeffs": []})")),
                         Error, HasCode("SchemaError"));
  REQUIRE_THROWS_MATCHES(cyc_from_json(Json::parse(R"({"N": 2, "coeffs": [1]})")),
                         Error, HasCode("SchemaError"));
  REQUIRE_THROWS_MATCHES(cyc_from_json(Json::array()), Error, HasCode("SchemaError"));
}

TEST_CASE("documents round-trip through json verbatim") {
  FixtureDocument doc = full_document();
  Json once = fixture_to_json(doc);
  FixtureDocument doc2 = fixture_from_json(once);
  Json twice = fixture_to_json(doc2);
  REQUIRE(once == twice);

  REQUIRE(doc2.name == "roundtrip_probe");
  REQUIRE(doc2.fg != nullptr);
  REQUIRE(doc2.fg->group().order() == 6);
  REQUIRE(doc2.character("ind").degree() == 2);
  REQUIRE(doc2.subchar("xi3").carrier().size() == 3);
  REQUIRE(doc2.parameter("mono").kind == "monomial");
  REQUIRE(doc2.parameter("wd_mix").summands.size() == 3);
  REQUIRE(doc2.segments.size() == 1);
  REQUIRE(doc2.expect == doc.expect);

  // Resolved parameters carry through the parse.
  WDParameter phi = doc2.wd_parameter(doc2.parameter("wd_mix"));
  REQUIRE(phi.dim() == 2 + 2 + 2);

  // A groupless document is legal and stable too.
  Json minimal = Json{{"name", "plain"}};
  FixtureDocument md = fixture_from_json(minimal);
  REQUIRE(md.fg == nullptr);
  REQUIRE(fixture_to_json(fixture_from_json(fixture_to_json(md))) ==
          fixture_to_json(md));
}

TEST_CASE("documents survive a trip through the filesystem") {
  FixtureDocument doc = full_document();
  const std::string path = "unit_document_roundtrip.json";
  save_fixture(doc, path);
  FixtureDocument back = load_fixture(path);
  REQUIRE(fixture_to_json(back) == fixture_to_json(doc));

  REQUIRE_THROWS_MATCHES(load_fixture("no_such_directory/missing.json"), Error,
                         HasCode("SchemaError"));
  const std::string garbled = "unit_document_garbled.json";
  {
    std::ofstream out(garbled);
    out << "not json {";
  }
  REQUIRE_THROWS_MATCHES(load_fixture(garbled), Error, HasCode("SchemaError"));
}

TEST_CASE("schema violations are rejected with precise codes") {
  Json good = fixture_to_json(full_document());

  Json bad = good;
  bad["bogus"] = 1;
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad.erase("name");
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["name"] = 7;
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  // Filtration without a group, then a group without a filtration.
  bad = good;
  bad.erase("group");
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));
  bad = good;
  bad.erase("filtration");
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  // Characters require a group section.
  bad = good;
  bad.erase("group");
  bad.erase("filtration");
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["group"]["mul"] = Json::array({0, 1, 1, 0});
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["expect"]["probe"] = Json{{"provenance", "missing value"}};
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["expect"]["probe"] = Json{{"value", 1}, {"note", "extra"}};
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["expect"] = 3;
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["parameters"][0]["kind"] = "weird";
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["parameters"][1]["summands"][0]["type"] = "weird";
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  bad = good;
  bad["parameters"][0]["summands"][0]["junk"] = 1;
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));

  // Dangling references surface as UnknownName during the eager resolve.
  bad = good;
  bad["parameters"][0]["summands"][0]["subchar"] = "nope";
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("UnknownName"));
  bad = good;
  bad["parameters"][1]["summands"][0]["character"] = "nope";
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("UnknownName"));

  // Segments are validated on parse.
  bad = good;
  bad["segments"][0]["m"] = 5;
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));
  bad = good;
  bad["segments"][0].erase("depth");
  REQUIRE_THROWS_MATCHES(fixture_from_json(bad), Error, HasCode("SchemaError"));
}

TEST_CASE("lookups fail loudly for missing names") {
  FixtureDocument doc = full_document();
  REQUIRE_THROWS_MATCHES(doc.character("zzz"), Error, HasCode("UnknownName"));
  REQUIRE_THROWS_MATCHES(doc.subchar("zzz"), Error, HasCode("UnknownName"));
  REQUIRE_THROWS_MATCHES(doc.parameter("zzz"), Error, HasCode("UnknownName"));
  REQUIRE_THROWS_MATCHES(doc.monomial_parameter(doc.parameter("wd_mix")), Error,
                         HasCode("SchemaError"));
  REQUIRE_THROWS_MATCHES(doc.wd_parameter(doc.parameter("mono")), Error,
                         HasCode("SchemaError"));
}
