#include "k3lat/cli.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

#ifndef K3LAT_DATA_DIR
#error "K3LAT_DATA_DIR must point at the data/ directory"
#endif

namespace k3lat {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(K3LAT_DATA_DIR) + "/" + name; }

TEST(CliTest, IntersectQuarticOctic) {
  const auto r = run({"intersect", "--lattice", data("quartic_octic_k9.lat"), "--f", "f8", "--m",
                      "2", "--g", "5*f4-1*f8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2666\n");
}

TEST(CliTest, SigmaPairing) {
  const auto r = run({"sigma", "--lattice", data("deg8.lat"), "--f", "f", "--m", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "4\n");
}

TEST(CliTest, RepresentNotFoundIsInconclusive) {
  const auto r = run({"represent", "--lattice", data("deg4.lat"), "--target", "8", "--bound", "10"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "NotFoundWithinBound(10)\n");
}

TEST(CliTest, RepresentFound) {
  const auto r = run({"--json", "represent", "--lattice", data("quartic_octic_k9.lat"),
                      "--target", "8"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "Found");
  EXPECT_EQ(j["witness"], nlohmann::json({0, 1}));
  EXPECT_EQ(j["bound"], 50);
}

TEST(CliTest, IsotropicSearch) {
  const auto found = run({"isotropic", "--lattice", data("hyperbolic_minus2.lat"), "--bound", "1"});
  EXPECT_EQ(found.code, 0);
  EXPECT_EQ(found.out, "Found (1,1)\n");
  EXPECT_EQ(run({"isotropic", "--lattice", data("deg4.lat")}).code, 3);
}

TEST(CliTest, LatticeInfo) {
  const auto r = run({"lattice-info", "--lattice", data("quartic_octic_k9.lat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("discriminant: -49"), std::string::npos);
  EXPECT_NE(r.out.find("signature: (1,1,0)"), std::string::npos);
  EXPECT_NE(r.out.find("reduced: [[4,1],[1,-12]]"), std::string::npos);

  const auto j = nlohmann::json::parse(
      run({"--json", "lattice-info", "--lattice", data("quartic_octic_k9.lat")}).out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["labels"], nlohmann::json({"f4", "f8"}));
  EXPECT_EQ(j["hodge_index"], true);
}

TEST(CliTest, BeauvilleExtend) {
  const auto r = run({"beauville-extend", "--lattice", data("quartic_octic_k9.lat"), "--n", "3"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["gram"][2][2], -4);
  EXPECT_EQ(j["labels"][2], "e");
}

TEST(CliTest, InvolutionAndReflection) {
  auto r = run({"involution", "--lattice", data("quartic_octic_k9.lat"), "--x", "f8-2*e"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5*f4 - 1*f8 - 3*e\n");
  r = run({"reflect", "--lattice", data("hyperbolic_minus2.lat"), "--x", "2*h-c", "--c", "-c"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2*h + 1*c\n");
  r = run({"reflect", "--lattice", data("hyperbolic_minus2.lat"), "--x", "h", "--c", "h"});
  EXPECT_EQ(r.code, 2);
}

TEST(CliTest, DensityCheck) {
  auto r = run({"density-check", "--lattice", data("quartic_octic_k9.lat"), "--f", "f8", "--g",
                "5*f4-f8"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("4 pass, 0 fail"), std::string::npos);
  r = run({"density-check", "--lattice", data("degree8_with_g.lat"), "--f", "f", "--g", "f"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("g proportional to f"), std::string::npos);
  r = run({"density-check", "--lattice", data("quartic_octic_k9.lat"), "--f", "f4", "--g", "f8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("2m^2"), std::string::npos);
}

TEST(CliTest, VerifyPaper) {
  const auto a = run({"verify-paper", "--bound", "50"});
  const auto b = run({"verify-paper", "--bound", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("suite verify-paper seed 42 bound 50"), std::string::npos);
  EXPECT_EQ(run({"verify-paper", "--bound", "1"}).code, 3);

  const auto j = nlohmann::json::parse(run({"--json", "verify-paper"}).out);
  EXPECT_EQ(j["seed"], 42);
  ASSERT_FALSE(j["claims"].empty());
  for (const auto& c : j["claims"]) {
    for (const char* key : {"id", "citation", "status", "lhs", "rhs", "detail"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
    EXPECT_EQ(c["status"], "pass") << c["id"];
  }
}

TEST(CliTest, InputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"represent", "--target", "2"}).code, 2);  // missing --lattice
  const auto missing = run({"isotropic", "--lattice", data("nope.lat")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  EXPECT_EQ(run({"represent", "--lattice", data("deg4.lat"), "--target", "x"}).code, 2);
  EXPECT_EQ(run({"isotropic", "--lattice", data("deg4.lat"), "--bound", "0"}).code, 2);
  EXPECT_EQ(run({"intersect", "--lattice", data("deg8.lat"), "--f", "q", "--m", "1", "--g", "f"}).code,
            2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace k3lat
