#include "k3lat/density.hpp"

#include "gtest/gtest.h"

namespace k3lat {
namespace {

const Claim& find(const ClaimReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no claim " + id);
}

TEST(DensityTest, TwoMSquaredRoot) {
  EXPECT_EQ(two_m_squared_root(2), Integer(1));
  EXPECT_EQ(two_m_squared_root(8), Integer(2));
  EXPECT_EQ(two_m_squared_root(72), Integer(6));
  EXPECT_FALSE(two_m_squared_root(4).has_value());
  EXPECT_FALSE(two_m_squared_root(0).has_value());
  EXPECT_FALSE(two_m_squared_root(-8).has_value());
  EXPECT_FALSE(two_m_squared_root(7).has_value());
}

TEST(DensityTest, HypothesesHoldOnDegreeEightExample) {
  const K3Input input{IntegralLattice{{8, 5}, {5, 2}}, {1, 0}};
  const auto r = check_density_hypotheses(input, {0, 1});
  ASSERT_EQ(r.claims.size(), 4u);
  EXPECT_EQ(r.count(ClaimStatus::Pass), 4u);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(std::get<Integer>(find(r, "density.gram_determinant").lhs), -9);
  EXPECT_EQ(std::get<Integer>(find(r, "density.star_square").lhs), 42);
}

TEST(DensityTest, ProportionalClassFailsDeterminant) {
  const K3Input input{IntegralLattice{{8, 5}, {5, 2}}, {1, 0}};
  const auto r = check_density_hypotheses(input, {1, 0});
  const auto& det = find(r, "density.gram_determinant");
  EXPECT_EQ(det.status, ClaimStatus::Fail);
  EXPECT_EQ(det.detail, "g proportional to f");
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(DensityTest, QuarticOcticExample) {
  // f = f8, g = 5 f4 - f8: <f,f> = 8, <f,g> = 37, <g,g> = 18.
  const K3Input input{IntegralLattice{{4, 9}, {9, 8}}, {0, 1}};
  const auto r = check_density_hypotheses(input, {5, -1});
  EXPECT_EQ(r.count(ClaimStatus::Pass), 4u);
  EXPECT_EQ(std::get<Integer>(find(r, "density.gram_determinant").lhs), -1225);
  EXPECT_EQ(std::get<Integer>(find(r, "density.positivity").lhs), 2738);
  EXPECT_EQ(std::get<Integer>(find(r, "density.positivity").rhs), 72);
  EXPECT_EQ(std::get<Integer>(find(r, "density.star_square").lhs), 2666);
}

TEST(DensityTest, RejectsBadInput) {
  const IntegralLattice l{{4, 9}, {9, 8}};
  EXPECT_THROW(check_density_hypotheses({l, {1, 0}}, {0, 1}), InputError);  // degree 4
  EXPECT_THROW(check_density_hypotheses({IntegralLattice{{8, 0}, {0, -2}}, {1, 0}}, {0, 1}),
               InputError);  // g^2 < 0
  EXPECT_THROW(check_density_hypotheses({l, {0, 1}, 3}, {5, -1}), Unsupported);
  EXPECT_THROW(check_density_hypotheses({l, {0, 1}, 1}, {5, -1}), InputError);
  EXPECT_THROW(check_density_hypotheses({l, {0, 1}, 2, 0}, {5, -1}), InputError);
  EXPECT_THROW(check_density_hypotheses({l, {0, 1, 0}}, {5, -1}), InputError);
}

TEST(DensityTest, VerifyPaperPassesAtDefaultBound) {
  const auto r = verify_paper_claims(kDefaultBound);
  EXPECT_EQ(r.count(ClaimStatus::Fail), 0u);
  EXPECT_EQ(r.count(ClaimStatus::Inconclusive), 0u);
  EXPECT_EQ(r.exit_code(), 0);
  for (const auto& c : r.claims) {
    EXPECT_FALSE(c.id.empty());
    EXPECT_FALSE(c.citation.empty());
  }
}

TEST(DensityTest, VerifyPaperIsDeterministic) {
  const auto a = verify_paper_claims(kDefaultBound, 7);
  const auto b = verify_paper_claims(kDefaultBound, 7);
  EXPECT_EQ(a.render_text(), b.render_text());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  const auto other = verify_paper_claims(kDefaultBound, 8);
  EXPECT_EQ(other.exit_code(), 0);
}

TEST(DensityTest, SmallBoundIsInconclusive) {
  const auto r = verify_paper_claims(1);
  EXPECT_EQ(r.count(ClaimStatus::Fail), 0u);
  EXPECT_GT(r.count(ClaimStatus::Inconclusive), 0u);
  EXPECT_EQ(r.exit_code(), 3);
  EXPECT_EQ(find(r, "represent.witness.S8").status, ClaimStatus::Inconclusive);
  EXPECT_EQ(find(r, "represent.witness.S2").status, ClaimStatus::Pass);
  EXPECT_THROW(verify_paper_claims(0), InputError);
}

TEST(DensityTest, ReportRendering) {
  ClaimReport r;
  r.suite = "demo";
  r.claims.push_back({"a", "x = x", ClaimStatus::Pass, Integer(1), Integer(1), ""});
  r.claims.push_back({"b", "y = y", ClaimStatus::Inconclusive, Integer(1) << 70, std::string("?"), ""});
  EXPECT_EQ(r.exit_code(), 3);
  const auto j = r.to_json();
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["claims"][0]["lhs"], 1);
  EXPECT_EQ(j["claims"][1]["lhs"], (Integer(1) << 70).str());
  EXPECT_EQ(j["claims"][1]["status"], "inconclusive");
  r.claims.push_back({"c", "z = z", ClaimStatus::Fail, Integer(0), Integer(1), ""});
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_NE(r.render_text().find("FAIL c"), std::string::npos);
}

}  // namespace
}  // namespace k3lat
