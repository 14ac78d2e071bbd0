#include "htype/cli.hpp"
#include "htype/errors.hpp"
#include "htype/io.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using htype::io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = htype::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("htype_cli_" + name)).string();
}

const char* kTruncated = HTYPE_FIXTURE_DIR "/truncated_quaternionic.json";
const char* kQuadruple = HTYPE_FIXTURE_DIR "/heisenberg_quadruple.json";

}  // namespace

TEST(Cli, ResolvesBuiltins) {
  EXPECT_EQ(htype::cli::resolve_algebra("heisenberg:2"), htype::HTypeAlgebra::heisenberg(2));
  EXPECT_EQ(htype::cli::resolve_algebra("quaternionic:1"), htype::HTypeAlgebra::quaternionic(1));
  EXPECT_EQ(htype::cli::resolve_algebra("octonionic"), htype::HTypeAlgebra::octonionic());
  EXPECT_EQ(htype::cli::resolve_algebra(kTruncated), oracle::truncated_quaternionic());
  EXPECT_THROW(htype::cli::resolve_algebra("heisenberg"), htype::ParseError);
  EXPECT_THROW(htype::cli::resolve_algebra("heisenberg:x"), htype::ParseError);
  EXPECT_THROW(htype::cli::resolve_algebra("spinor:3"), htype::ParseError);
}

TEST(Cli, ValidateExitCodes) {
  const auto ok = run({"validate", "--algebra", "octonionic"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const Json j = Json::parse(ok.out);
  EXPECT_EQ(j["command"], "validate");
  EXPECT_EQ(j["algebra"]["m"], 8);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_TRUE(j["results"]["iwasawa_ok"].get<bool>());
  EXPECT_TRUE(j.contains("duration"));

  const auto bad = run({"validate", "--algebra", kTruncated});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(Json::parse(bad.out)["results"]["iwasawa_ok"].get<bool>());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"validate", "--algebra", "nosuch:1"}).code, 2);
  EXPECT_EQ(run({"validate", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"check", "--suite", "nosuch"}).code, 2);
  EXPECT_EQ(run({"check", "--mutation", "nosuch"}).code, 2);
  const auto missing = run({"distance"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("error:"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("check"), std::string::npos);
  const auto sub = run({"check", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("--mutation"), std::string::npos);
}

TEST(Cli, DistanceInlinePoints) {
  const auto r = run({"distance", "--algebra", "heisenberg:1", "--points",
                      R"([{"x":[-1,0],"t":[0]},{"x":[2,0],"t":[0]}])"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(Json::parse(r.out)["results"]["distance"].get<double>(), 3.0);
  const auto inf = run({"distance", "--points", R"([{"x":[0,0],"t":[0]},"inf"])"});
  EXPECT_EQ(Json::parse(inf.out)["results"]["distance"], "inf");
}

TEST(Cli, DistanceReportsPointFieldErrors) {
  const auto r = run({"distance", "--points", R"([{"x":[0,0],"t":[0]},{"x":[0],"t":[0]}])"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("points[1].x"), std::string::npos) << r.err;
}

TEST(Cli, CrossRatioAndDefectFromFile) {
  const auto x = run({"cross-ratio", "--points", kQuadruple});
  ASSERT_EQ(x.code, 0) << x.err;
  EXPECT_DOUBLE_EQ(Json::parse(x.out)["results"]["sqrt_value"].get<double>(), 4.0 / 3.0);
  const auto d = run({"defect", "--points", kQuadruple, "--format", "csv"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out.substr(0, d.out.find('\n')), "pairing,X1_sqrt,X2_sqrt,defect");
  EXPECT_NE(d.out.find("13|24,"), std::string::npos);
}

TEST(Cli, DefectRejectsCoincidentPoints) {
  const auto r = run({"defect", "--points",
                      R"([{"x":[1,0],"t":[0]},{"x":[1,0],"t":[0]},{"x":[2,0],"t":[0]},"inf"])"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, RCircleCommand) {
  const auto sep = run({"rcircle", "--points",
                        R"({"direction":[1,0],"lambdas":[0,-1,"inf",2],"word":[{"op":"invert"},{"op":"dilate","arg":2}]})"});
  ASSERT_EQ(sep.code, 0) << sep.err;
  const Json j = Json::parse(sep.out);
  EXPECT_TRUE(j["results"]["separated"].get<bool>());
  EXPECT_EQ(j["tolerances"]["defect"], 1e-8);
  EXPECT_LE(std::abs(j["results"]["tested"]["defect"].get<double>()), 1e-12);
}

TEST(Cli, CheckSuiteJsonAndCsv) {
  const auto j = run({"check", "--suite", "triangle", "--samples", "500", "--algebra", "quaternionic:1"});
  ASSERT_EQ(j.code, 0) << j.err;
  const Json report = Json::parse(j.out);
  EXPECT_EQ(report["results"]["suite"], "triangle");
  EXPECT_EQ(report["results"]["samples"], 500);
  EXPECT_EQ(report["algebra"]["mutation"], "none");

  const auto c = run({"check", "--suite", "metric-axioms", "--samples", "200", "--format", "csv"});
  ASSERT_EQ(c.code, 0) << c.err;
  std::istringstream lines(c.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 5);  // header + four leaf suites
}

TEST(Cli, CheckMutationFailsWithExitOne) {
  const auto r = run({"check", "--suite", "triangle", "--samples", "1000", "--mutation", "doubled-central"});
  EXPECT_EQ(r.code, 1);
  const Json report = Json::parse(r.out);
  EXPECT_FALSE(report["results"]["passed"].get<bool>());
  EXPECT_FALSE(report["results"]["witness"].is_null());
}

TEST(Cli, CheckTruncatedAlgebraFailsIwasawa) {
  const auto r = run({"check", "--suite", "iwasawa", "--samples", "2000", "--algebra", kTruncated});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, OutWritesFileAndExportRoundTrips) {
  const auto path = temp_path("octonionic.json");
  const auto r = run({"export", "--algebra", "octonionic", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(htype::cli::resolve_algebra(path), htype::HTypeAlgebra::octonionic());
  const auto v = run({"validate", "--algebra", path});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(Json::parse(v.out)["algebra"]["source"], path);
  std::remove(path.c_str());
}

TEST(Cli, SeedIsRecorded) {
  const auto r = run({"check", "--suite", "symmetry", "--samples", "100", "--seed", "7"});
  EXPECT_EQ(Json::parse(r.out)["seed"], 7);
}
