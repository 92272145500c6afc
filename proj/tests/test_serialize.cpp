#include "spinor/errors.hpp"
#include "spinor/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace spinor;

TEST_CASE("eigenvalue records round-trip with decimal strings") {
  EigenvalueRecord r{"SK.14.2", 2, 14, {{2, 12240, Integer(66521344)}, {3, Integer("1929960"), std::nullopt}}};
  Json j = to_json(r);
  CHECK(j["eigenvalues"][0]["lambda_p"] == "12240");
  CHECK(j["eigenvalues"][0]["lambda_p2"] == "66521344");
  CHECK_FALSE(j["eigenvalues"][1].contains("lambda_p2"));
  EigenvalueRecord back = record_from_json(j);
  CHECK(back.label == r.label);
  CHECK(back.at(3).lambda_p == 1929960);
  CHECK(back.at(2).lambda_p2 == 66521344);
}

TEST_CASE("records reject numeric integers and missing fields") {
  Json j = Json::parse(R"({"label":"x","degree":1,"weight":12,"eigenvalues":[{"p":2,"lambda_p":-24}]})");
  CHECK_THROWS_AS(record_from_json(j), InputError);
  Json k = Json::parse(R"({"label":"x","degree":1,"eigenvalues":[]})");
  CHECK_THROWS_AS(record_from_json(k), InputError);
  Json m = Json::parse(R"({"label":"x","degree":1,"weight":12,"eigenvalues":[{"p":2,"lambda_p":"-2x4"}]})");
  CHECK_THROWS_AS(record_from_json(m), InputError);
}

TEST_CASE("local factors round-trip in both modes") {
  LocalFactor f(2, spin_rep(2), LocalFactor::ExactCoeffs{1, Integer("-12240"), Integer("1125899906842624")});
  Json j = to_json(f);
  CHECK(j["coeffs"][2] == "1125899906842624");
  CHECK_FALSE(j.contains("mode"));
  CHECK(local_factor_from_json(j) == f);

  LocalFactor g(3, "x", LocalFactor::NumericCoeffs{1.0, Complex(0.25, -2.0)});
  Json k = to_json(g);
  CHECK(k["mode"] == "numeric");
  CHECK(local_factor_from_json(k) == g);

  Json bad = j;
  bad["degree"] = 5;
  CHECK_THROWS_AS(local_factor_from_json(bad), InputError);
}

TEST_CASE("fixtures files are deterministic and validated") {
  Fixtures fx;
  fx.config = {7, 16};
  fx.records = modforms::generate_fixture_records(fx.config);
  std::string text = dump_fixtures(fx);
  CHECK(text == dump_fixtures(fx));

  auto path = std::filesystem::temp_directory_path() / "spinor_test_fixtures.json";
  write_fixtures(path, fx);
  Fixtures back = read_fixtures(path);
  CHECK(dump_fixtures(back) == text);
  CHECK(back.find("Delta.12.1").at(7).lambda_p == -16744);
  CHECK_THROWS_AS(back.find("nope"), InputError);

  std::ofstream(path) << "{not json";
  CHECK_THROWS_AS(read_fixtures(path), InputError);
  std::ofstream(path) << R"({"schema_version":99,"config":{},"records":[]})";
  CHECK_THROWS_AS(read_fixtures(path), InputError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_fixtures(path), InputError);
}

TEST_CASE("report payloads") {
  Json g = to_json(linf_rankin_selberg(12, 14));
  CHECK(g["prefactor"]["rational"] == "1/8");
  CHECK(g["center"] == 37);
  Json h = to_json(hodge_gl2(12));
  CHECK(h["weight"] == 11);
  CHECK(h["pairs"].size() == 2);
}
