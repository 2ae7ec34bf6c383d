#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "mabuchi/error.hpp"
#include "mabuchi/io.hpp"

using mabuchi::AdmissibleManifold;
using mabuchi::BigRational;
using mabuchi::ErrorCode;
using mabuchi::Format;
using Json = nlohmann::json;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const mabuchi::Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("formats") {
  CHECK(mabuchi::parse_format("table") == Format::Table);
  CHECK(mabuchi::parse_format("csv") == Format::Csv);
  CHECK(mabuchi::parse_format("json") == Format::Json);
  CHECK(code_of([] { (void)mabuchi::parse_format("xml"); }) == ErrorCode::ParseError);
}

TEST_CASE("P^n tuples") {
  const auto t = mabuchi::parse_pn_tuple("6,2,1,4");
  CHECK(t == mabuchi::PnTuple{6, 2, 1, 4});
  for (const char* bad : {"", "1,1,0", "1,1,0,1,2", "1,,0,1", "1,1,0,1,", "a,1,0,1", "-1,1,0,1", "1 ,1,0,1"}) {
    INFO(bad);
    CHECK(code_of([&] { (void)mabuchi::parse_pn_tuple(bad); }) == ErrorCode::ParseError);
  }
}

TEST_CASE("manifests") {
  const auto m = mabuchi::parse_manifest(R"({"d0": 0, "d_inf": 1, "factors": [{"d": 1, "epsilon": 1, "s": "2"}]})");
  CHECK(m == AdmissibleManifold(0, 1, {{1, 1, 2}}));
  const auto ints = mabuchi::parse_manifest(R"({"d0": 0, "d_inf": 1, "factors": [{"d": 1, "epsilon": 1, "s": 2}]})");
  CHECK(ints == m);
  const auto pn = mabuchi::parse_manifest(R"({"pn_bundle": {"n": 1, "k": 1, "d0": 0, "d_inf": 1}})");
  CHECK(pn.pn_tuple().has_value());
  CHECK(pn == m);
  const auto mixed =
      mabuchi::parse_manifest(R"({"d0": 1, "d_inf": 0, "factors": [{"d": 2, "epsilon": -1, "s": "7/3"}, {"d": 1, "epsilon": 1, "s": "5/2"}]})");
  CHECK(mixed.factors().size() == 2);
  CHECK(mixed.factors()[0].einstein == BigRational(7, 3));

  CHECK(code_of([] { (void)mabuchi::parse_manifest("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)mabuchi::parse_manifest("[]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)mabuchi::parse_manifest(R"({"d_inf": 1})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)mabuchi::parse_manifest(R"({"d0": -1, "d_inf": 1})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)mabuchi::parse_manifest(R"({"d0": 0, "d_inf": 0, "factors": [{"d": 1, "epsilon": 1, "s": "1.5"}]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { (void)mabuchi::parse_manifest(R"({"d0": 0, "d_inf": 0, "factors": [{"d": 1, "s": "3"}]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { (void)mabuchi::parse_manifest(R"({"d0": 2, "d_inf": 0, "factors": [{"d": 1, "epsilon": 1, "s": "3"}]})"); }) ==
        ErrorCode::NotFano);
  CHECK(code_of([] { (void)mabuchi::parse_manifest(R"({"pn_bundle": {"n": 1, "k": 2, "d0": 0, "d_inf": 0}})"); }) ==
        ErrorCode::NotFano);
}

TEST_CASE("classification JSON round trip") {
  const auto m = AdmissibleManifold::from_pn_bundle({1, 1, 0, 1});
  const auto report = mabuchi::classify(m);
  const std::string text = mabuchi::render_classification(m, report, Format::Json);
  const Json j = Json::parse(text);
  CHECK(j["schema"] == "mabuchi.classify/1");
  CHECK(j["M_X"] == "35/43");
  CHECK(j["mabuchi_soliton"] == true);
  CHECK(j["ke_exists"] == false);
  CHECK(j["kr_soliton"] == true);
  CHECK(BigRational::parse(j["M_X"].get<std::string>()) == report.mabuchi_constant);
  CHECK(BigRational::parse(j["moments"]["b2"].get<std::string>()) == BigRational(32, 45));
  CHECK(j["decimal"]["M_X"] == "0.81395348837209302326");
  // rebuild the manifold from the embedded description
  const auto& f = j["manifold"]["factors"][0];
  CHECK(AdmissibleManifold(j["manifold"]["d0"], j["manifold"]["d_inf"],
                           {{f["d"], f["epsilon"], BigRational::parse(f["s"].get<std::string>())}}) == m);
  // identical input, identical bytes
  CHECK(mabuchi::render_classification(m, mabuchi::classify(m), Format::Json) == text);
}

TEST_CASE("classification table and CSV") {
  const auto m = AdmissibleManifold::from_pn_bundle({2, 1, 0, 1});
  const auto r = mabuchi::classify(m);
  const std::string table = mabuchi::render_classification(m, r, Format::Table);
  CHECK(table.find("Mabuchi soliton       no") != std::string::npos);
  const std::string csv = mabuchi::render_classification(m, r, Format::Csv);
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header.rfind("d0,d_inf,dimension,w,", 0) == 0);
  CHECK(row.find(r.mabuchi_constant.str()) != std::string::npos);
}

TEST_CASE("scan CSV rows parse back") {
  const mabuchi::ScanBounds bounds{3, 2, 1, 1};
  const auto scan = mabuchi::grid_scan(bounds);
  const std::string csv = mabuchi::render_scan(bounds, scan, Format::Csv, false);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,k,d0,d_inf,I,M_X,M_X_decimal,exists");
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    REQUIRE(row < scan.verdicts.size());
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 8);
    const auto& v = scan.verdicts[row++];
    CHECK(BigRational::parse(cells[4]) == v.i);
    CHECK(BigRational::parse(cells[5]) == v.mabuchi_constant);
    CHECK(cells[6] == v.mabuchi_constant.to_decimal(mabuchi::kDecimalDigits));
    CHECK(cells[7] == (v.computed_exists ? "true" : "false"));
  }
  CHECK(row == scan.verdicts.size());

  const Json j = Json::parse(mabuchi::render_scan(bounds, scan, Format::Json, true));
  CHECK(j["schema"] == "mabuchi.scan/1");
  CHECK(j["tuples"].size() == scan.verdicts.size());
  CHECK(j["skipped"].size() == scan.skipped.size());
  CHECK(j["summary"]["mismatches"] == 0);
}

TEST_CASE("profile export") {
  const auto m = AdmissibleManifold::from_pn_bundle({1, 1, 0, 1});
  const auto u = mabuchi::mabuchi_weight(m);
  const auto theta = mabuchi::build_profile(m, u);
  mabuchi::ProfileExport e{&u, &theta, mabuchi::verify_profile(theta), true, true};
  const std::string csv = mabuchi::render_profile(m, e, Format::Csv, 3);
  CHECK(csv == "x,theta\n-1.00000000000000000000,0.00000000000000000000\n0.00000000000000000000," +
                   theta(BigRational(0)).to_decimal(20) + "\n1.00000000000000000000,0.00000000000000000000\n");
  // CSV without an explicit count uses 101 samples
  const std::string dense = mabuchi::render_profile(m, e, Format::Csv, 0);
  CHECK(std::count(dense.begin(), dense.end(), '\n') == 102);

  const Json j = Json::parse(mabuchi::render_profile(m, e, Format::Json, 5));
  CHECK(j["weight"]["kind"] == "affine");
  CHECK(j["weight"]["alpha"] == "30/43");
  CHECK(j["verification"]["passed"] == true);
  CHECK(j["samples"].size() == 5);
  CHECK(j["samples"][1]["x"] == "-1/2");
}

TEST_CASE("KR export") {
  const auto m = AdmissibleManifold::from_pn_bundle({1, 1, 0, 0});
  mabuchi::KrConfig config;
  config.digits = 32;
  config.tolerance_exponent = 15;
  const auto s = mabuchi::solve_kr_soliton(m, config);
  const Json j = Json::parse(mabuchi::render_kr(m, s, config, Format::Json, 3));
  CHECK(j["schema"] == "mabuchi.krs/1");
  CHECK(j["precision"] == 32);
  CHECK(j["tolerance"] == "1e-15");
  CHECK(j["samples"].size() == 3);
  const auto tau = mabuchi::Real::parse(j["tau"].get<std::string>(), 32);
  CHECK(abs(tau - s.tau) < mabuchi::Real::pow10(-30, 32));
  const std::string csv = mabuchi::render_kr(m, s, config, Format::Csv, 0);
  CHECK(csv.rfind("tau,residual,barycenter,precision\n", 0) == 0);
}
