#include "k3lat/lattice.hpp"

#include "gtest/gtest.h"
#include "k3lat/random_lattices.hpp"
#include "oracles.hpp"

namespace k3lat {
namespace {

oracle::Matrix to_matrix(const IntegralLattice& l) {
  oracle::Matrix m;
  for (const auto& row : l.gram()) {
    m.emplace_back();
    for (const auto& v : row) m.back().push_back(static_cast<std::int64_t>(v));
  }
  return m;
}

TEST(LatticeTest, PairExamples) {
  const IntegralLattice quartic_octic{{4, 9}, {9, 8}};
  EXPECT_EQ(pair(quartic_octic, {1, 0}, {0, 1}), 9);
  EXPECT_EQ(pair(quartic_octic, {0, 0}, {3, -7}), 0);
  const IntegralLattice hyperbolic{{2, 0}, {0, -2}};
  EXPECT_EQ(pair(hyperbolic, {1, 1}, {1, 1}), 0);
}

TEST(LatticeTest, PairRejectsDimensionMismatch) {
  const IntegralLattice l{{2, 0}, {0, -2}};
  EXPECT_THROW(pair(l, {1, 0, 0}, {1, 0}), InputError);
  EXPECT_THROW(pair(l, {1, 0}, {1}), InputError);
}

TEST(LatticeTest, ConstructorValidates) {
  EXPECT_THROW(IntegralLattice({{1, 2}, {3, 4}}), InputError);
  EXPECT_THROW(IntegralLattice(IntegralLattice::Gram{{1, 2}}), InputError);
  EXPECT_THROW(IntegralLattice(IntegralLattice::Gram{{1}}, std::vector<std::string>{"a", "b"}),
               InputError);
  EXPECT_THROW(IntegralLattice(IntegralLattice::Gram{{1, 0}, {0, 1}},
                               std::vector<std::string>{"a", "a"}),
               InputError);
}

TEST(LatticeTest, SignatureExamples) {
  EXPECT_EQ(signature(IntegralLattice{{4, 9}, {9, 8}}), (SignatureProfile{1, 1, 0}));
  EXPECT_EQ(signature(IntegralLattice{{2, 0}, {0, -2}}), (SignatureProfile{1, 1, 0}));
  EXPECT_EQ(signature(IntegralLattice{{0}}), (SignatureProfile{0, 0, 1}));
  EXPECT_EQ(signature(IntegralLattice{{1, 1}, {1, 1}}), (SignatureProfile{1, 0, 1}));
  EXPECT_EQ(signature(IntegralLattice{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}),
            (SignatureProfile{0, 3, 0}));
}

TEST(LatticeTest, CharacteristicPolynomial) {
  // det(tI - [[4,9],[9,8]]) = t^2 - 12 t - 49
  const auto p = characteristic_polynomial(IntegralLattice{{4, 9}, {9, 8}});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], -49);
  EXPECT_EQ(p[1], -12);
  EXPECT_EQ(p[2], 1);
}

TEST(LatticeTest, DiscriminantExamples) {
  EXPECT_EQ(discriminant(IntegralLattice{{4, 8}, {8, 8}}), -32);
  EXPECT_EQ(discriminant(IntegralLattice{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1);
  EXPECT_EQ(discriminant(IntegralLattice{{4}}), 4);  // degree 2(n-1), n = 3
  EXPECT_EQ(discriminant(IntegralLattice{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(discriminant(IntegralLattice{{0, 0}, {0, 5}}), 0);
}

TEST(LatticeTest, DiscriminantMatchesCofactorExpansion) {
  SeededRng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto l = random_symmetric(rng, static_cast<std::size_t>(rng.uniform(1, 5)), 4);
    EXPECT_EQ(discriminant(l), Integer(oracle::cofactor_det(to_matrix(l)).str()));
  }
}

TEST(LatticeTest, SignatureMatchesRationalElimination) {
  SeededRng rng(12);
  for (int t = 0; t < 300; ++t) {
    // Small entries make singular and zero-diagonal cases common.
    const auto l = random_symmetric(rng, static_cast<std::size_t>(rng.uniform(1, 5)), 2);
    const auto expected = oracle::rational_inertia(to_matrix(l));
    const auto sig = signature(l);
    EXPECT_EQ(sig.n_plus, static_cast<std::size_t>(expected.plus));
    EXPECT_EQ(sig.n_minus, static_cast<std::size_t>(expected.minus));
    EXPECT_EQ(sig.n_zero, static_cast<std::size_t>(expected.zero));
  }
}

TEST(LatticeTest, OrthogonalSumExamples) {
  EXPECT_EQ(orthogonal_sum(IntegralLattice{{4}}, IntegralLattice{{-2}}).gram(),
            (IntegralLattice{{4, 0}, {0, -2}}).gram());
  const IntegralLattice l{{2, 1}, {1, 2}};
  EXPECT_EQ(orthogonal_sum(l, IntegralLattice(IntegralLattice::Gram{})), l);
  EXPECT_EQ(orthogonal_sum(l, IntegralLattice{{-2}}).gram(),
            (IntegralLattice{{2, 1, 0}, {1, 2, 0}, {0, 0, -2}}).gram());
}

TEST(LatticeTest, OrthogonalSumDisambiguatesLabels) {
  const IntegralLattice a(IntegralLattice::Gram{{2}}, std::vector<std::string>{"h"});
  const IntegralLattice b(IntegralLattice::Gram{{-2}}, std::vector<std::string>{"h"});
  const auto s = orthogonal_sum(a, b);
  EXPECT_EQ(*s.labels(), (std::vector<std::string>{"h", "h'"}));
  const auto t = orthogonal_sum(a, IntegralLattice{{0}});
  EXPECT_EQ(*t.labels(), (std::vector<std::string>{"h", "v1"}));
}

TEST(LatticeTest, SublatticeGramExamples) {
  const IntegralLattice l{{4, 9}, {9, 8}};
  EXPECT_EQ(sublattice_gram(l, {{1, 0}, {0, 1}}).gram(), l.gram());
  EXPECT_EQ(sublattice_gram(l, {{1, 1}}).gram(), (IntegralLattice{{30}}).gram());
  const auto repeated = sublattice_gram(l, {{2, -1}, {2, -1}});
  EXPECT_EQ(repeated.rank(), 2u);
  EXPECT_EQ(discriminant(repeated), 0);
  EXPECT_THROW(sublattice_gram(l, {}), InputError);
  EXPECT_THROW(sublattice_gram(l, {{1, 0, 0}}), InputError);
}

TEST(LatticeTest, Primitivity) {
  EXPECT_FALSE(is_primitive({2, 4}));
  EXPECT_TRUE(is_primitive({1, 1}));
  EXPECT_TRUE(is_primitive({6, 10, 15}));
  EXPECT_TRUE(is_primitive({0, -1}));
  EXPECT_THROW(is_primitive({0, 0}), InputError);
}

TEST(LatticeTest, HodgeIndexShape) {
  EXPECT_TRUE(hodge_index_valid(IntegralLattice{{4, 9}, {9, 8}}));
  EXPECT_FALSE(hodge_index_valid(IntegralLattice{{2, 0}, {0, 2}}));
  EXPECT_TRUE(hodge_index_valid(IntegralLattice{{2}}));
  EXPECT_FALSE(hodge_index_valid(IntegralLattice{{2, 0}, {0, 0}}));
}

TEST(LatticeTest, PairIsSymmetricAndBilinear) {
  SeededRng rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto rank = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto l = random_symmetric(rng, rank, 50);
    const auto x = rng.vector(rank, -100, 100);
    const auto y = rng.vector(rank, -100, 100);
    const auto z = rng.vector(rank, -100, 100);
    const Integer a = rng.uniform(-1000, 1000);
    const Integer b = rng.uniform(-1000, 1000);
    EXPECT_EQ(pair(l, x, y), pair(l, y, x));
    EXPECT_EQ(pair(l, a * x + b * y, z), a * pair(l, x, z) + b * pair(l, y, z));
  }
}

TEST(LatticeTest, DiscriminantMultiplicativeUnderOrthogonalSum) {
  SeededRng rng(2);
  for (int t = 0; t < 300; ++t) {
    const auto l1 = random_symmetric(rng, static_cast<std::size_t>(rng.uniform(0, 4)), 9);
    const auto l2 = random_symmetric(rng, static_cast<std::size_t>(rng.uniform(0, 4)), 9);
    EXPECT_EQ(discriminant(orthogonal_sum(l1, l2)), discriminant(l1) * discriminant(l2));
  }
}

TEST(LatticeTest, SignatureInvariantUnderUnimodularChange) {
  SeededRng rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto rank = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto l = random_symmetric(rng, rank, 5);
    const auto u = random_unimodular(rng, rank, 3 * static_cast<int>(rank));
    const auto moved = u.transform(l);
    EXPECT_EQ(signature(moved), signature(l));
    EXPECT_EQ(discriminant(moved), discriminant(l));
  }
}

TEST(LatticeTest, SublatticeOfBasisReproducesGram) {
  SeededRng rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto rank = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto l = random_symmetric(rng, rank, 20);
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < rank; ++i) basis.push_back(LatticeVector::unit(rank, i));
    EXPECT_EQ(sublattice_gram(l, basis).gram(), l.gram());
  }
}

TEST(LatticeTest, RankTwoHodgeIndexMatchesPositiveVector) {
  // For det < 0 the form is indefinite, so a positive square shows up
  // in a small box (entries are bounded by 12).
  SeededRng rng(5);
  int checked = 0;
  while (checked < 200) {
    const auto l = random_symmetric(rng, 2, 12);
    if (discriminant(l) >= 0) continue;
    ++checked;
    bool positive = false;
    for (long long a = -25; a <= 25 && !positive; ++a) {
      for (long long b = -25; b <= 25 && !positive; ++b) positive = square(l, {a, b}) > 0;
    }
    EXPECT_EQ(hodge_index_valid(l), positive);
    EXPECT_TRUE(hodge_index_valid(l));
  }
}

TEST(LatticeTest, LargeEntriesStayExact) {
  // 32 - k^2 with k beyond 64-bit range.
  const Integer k = Integer(1) << 80;
  const IntegralLattice l(IntegralLattice::Gram{{4, k}, {k, 8}});
  EXPECT_EQ(discriminant(l), 32 - k * k);
  EXPECT_EQ(signature(l), (SignatureProfile{1, 1, 0}));
}

}  // namespace
}  // namespace k3lat
