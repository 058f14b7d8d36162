#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pinf/cli.hpp"
#include "pinf/json.hpp"

using namespace pinf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = run_command(args, out, err, &in);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("pinf_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"series", "eval", "x0 + x1"}).code, 0);
  EXPECT_EQ(run({"series", "invert", "x0"}).code, 1);
  EXPECT_EQ(run({"series", "eval", "x0 +"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--n", "0", "series", "eval", "x0"}).code, 2);
  EXPECT_EQ(run({"leavitt", "witness", "e"}).code, 1);
}

TEST(Cli, ParseErrorsPointAtTheColumn) {
  Result r = run({"series", "eval", "x0 +"});
  EXPECT_NE(r.err.find("column 5"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("    ^"), std::string::npos) << r.err;
  Result j = run({"--json", "series", "eval", "x0 +"});
  Json doc = Json::parse(j.out);
  EXPECT_EQ(doc["column"], 5);
  EXPECT_EQ(doc["exit_code"], 2);
}

TEST(Cli, KZeroMonoid) {
  Result r = run({"--json", "k0", "monoid", "I | 3I=I"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["invariant_factors"], Json::parse("[2]"));
  EXPECT_EQ(doc["generators"]["I"], Json::parse("[1]"));
  EXPECT_EQ(doc["generator_images"]["I"], Json::parse("[1]"));
  EXPECT_TRUE(doc.contains("shape_report"));
}

TEST(Cli, LeavittWitness) {
  Result r = run({"--json", "--n", "2", "leavitt", "witness", "y1*x2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["beta"], "x1");
  EXPECT_EQ(doc["gamma"], "y2");
  EXPECT_EQ(doc["check"], "1");
}

TEST(Cli, CertificatesRoundTrip) {
  for (std::vector<std::string> cmd : {std::vector<std::string>{"--json", "leavitt", "witness", "y1*x2 + x1"},
                                       std::vector<std::string>{"--json", "leavitt", "witness", "--infinite", "y1*y2"},
                                       std::vector<std::string>{"--json", "skew", "witness", "y0*y1*(1 - x0)^-1 + e"}}) {
    Result r = run(cmd);
    ASSERT_EQ(r.code, 0) << r.err;
    std::string path = temp_file("cert.json", r.out);
    EXPECT_EQ(run({"--verify-cert", path}).code, 0);
    EXPECT_EQ(run({"--verify-cert", "-"}, r.out).code, 0);
    Json doc = Json::parse(r.out);
    doc["beta"] = "0";
    EXPECT_EQ(run({"--verify-cert", "-"}, doc.dump()).code, 1);
    std::filesystem::remove(path);
  }
  EXPECT_EQ(run({"--verify-cert", "-"}, "not json").code, 2);
  EXPECT_EQ(run({"--verify-cert", "-"}, R"({"kind":"V"})").code, 1);
}

TEST(Cli, RealizeBuildAndVerify) {
  Result r = run({"--json", "realize", "build", "--from", "0", "--to", "2", "--mult", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["generators"]["construction"], 2);
  EXPECT_EQ(doc["generators"]["size"], 1);
  EXPECT_EQ(run({"realize", "verify", "--from", "2", "--to", "4", "--mult", "2"}).code, 0);
  Result bad = run({"realize", "verify", "--from", "2", "--to", "4", "--mult", "2", "--tamper"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("A0*B0 = E"), std::string::npos) << bad.out;
  EXPECT_EQ(run({"realize", "build", "--from", "2", "--to", "4", "--mult", "1"}).code, 2);
}

TEST(Cli, RealizeChain) {
  std::string path = temp_file("plan.json",
                               R"({"groups":[{"cyclic":[2,0],"u":[1,1]},{"cyclic":[2,0],"u":[1,1]}],)"
                               R"("maps":[[[1,0],[0,1]]]})");
  Result r = run({"--json", "realize", "chain", path});
  EXPECT_EQ(r.code, 0) << r.err;
  std::filesystem::remove(path);
  EXPECT_EQ(run({"realize", "chain", "/nonexistent/plan.json"}).code, 2);
}

TEST(Cli, SeededOutputIsReproducible) {
  std::vector<std::string> cmd{"--seed", "7", "realize", "verify", "--from", "3", "--to", "3", "--mult", "1",
                               "--samples", "2"};
  Result a = run(cmd), b = run(cmd);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  Result s1 = run({"selftest", "1"}), s2 = run({"selftest", "1"});
  EXPECT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, SeriesBackends) {
  Result exact = run({"series", "equal", "(1 - x0)^-1", "1 + x0*(1 - x0)^-1"});
  EXPECT_EQ(exact.code, 0);
  Result trunc = run({"--json", "series", "eval", "--backend", "truncated", "--length", "3", "(1 - x0)^-1"});
  EXPECT_EQ(trunc.code, 0) << trunc.err;
  Result a = run({"--json", "series", "transduce", "--letter", "0", "x0*x1 + x1"});
  EXPECT_EQ(a.code, 0) << a.err;
}
