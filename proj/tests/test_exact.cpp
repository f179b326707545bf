#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "psdrank/exact/elimination.hpp"
#include "psdrank/exact/matrix_io.hpp"
#include "psdrank/exact/multiquad.hpp"
#include "psdrank/exact/subspace.hpp"

namespace psdrank {
namespace {

TEST(Rational, ParsesAndNormalises) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_EQ(from_double(0.375), Rational(3, 8));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(oracle::displayed_s6()), 3U);
  EXPECT_EQ(rank(ExactMatrix::identity(3)), 3U);
  EXPECT_EQ(rank(ExactMatrix(2, 3)), 0U);
}

TEST(Rank, BareissMatchesNaiveElimination) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const ExactMatrix m = oracle::random_rational_matrix(rng, 5);
    ASSERT_EQ(rank(m), oracle::naive_rank(m)) << format_matrix(m);
  }
}

TEST(Det, Examples) {
  EXPECT_EQ(det(ExactMatrix::identity(4)), Rational(1));
  EXPECT_EQ(det(ExactMatrix{{0, 1}, {1, 0}}), Rational(-1));
  const MultiQuadMatrix d{{sqrt_embed(2), 0}, {0, sqrt_embed(3)}};
  EXPECT_EQ(det(d), sqrt_embed(6));
  EXPECT_THROW(det(ExactMatrix(2, 3)), std::invalid_argument);
  EXPECT_EQ(det(ExactMatrix{{1, 2}, {2, 4}}), Rational(0));
  EXPECT_EQ(det(ExactMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), Rational(6));
}

TEST(Subspace, KernelAndImage) {
  EXPECT_EQ(kernel(ExactMatrix::identity(3)).dim(), 0U);
  EXPECT_EQ(image(ExactMatrix(3, 3)).dim(), 0U);
  const Subspace k = kernel(ExactMatrix{{1, 1}});
  const std::vector<std::vector<Rational>> expected{{1, -1}};
  EXPECT_EQ(k, Subspace::span(2, expected));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactMatrix m = oracle::random_rational_matrix(rng, 5);
    const Subspace ker = kernel(m);
    EXPECT_EQ(ker.dim() + rank(m), m.cols());
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      ExactMatrix v(m.cols(), 1);
      for (std::size_t j = 0; j < m.cols(); ++j) v(j, 0) = ker.basis()(i, j);
      EXPECT_TRUE((m * v).is_zero_matrix());
    }
    EXPECT_EQ(image(m).dim(), rank(m));
  }
}

TEST(Subspace, ContainsAndSum) {
  const std::vector<std::vector<Rational>> e1{{1, 0}};
  const std::vector<std::vector<Rational>> e2{{0, 1}};
  const Subspace a = Subspace::span(2, e1);
  const Subspace b = Subspace::span(2, e2);
  EXPECT_TRUE(contains(Subspace::full(2), a));
  EXPECT_FALSE(contains(a, b));
  EXPECT_EQ(sum(a, b), Subspace::full(2));
  EXPECT_THROW(contains(a, Subspace::full(3)), std::invalid_argument);
  EXPECT_THROW(sum(a, Subspace(3)), std::invalid_argument);
}

TEST(Subspace, MutualContainmentIffEqualBases) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> count(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    auto random_span = [&] {
      const std::size_t k = count(rng);
      ExactMatrix g(k, 3);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < 3; ++j) g(i, j) = coef(rng);
      return Subspace::span(g);
    };
    const Subspace a = random_span();
    const Subspace b = random_span();
    EXPECT_EQ(a.contains(b) && b.contains(a), a.basis() == b.basis());
    // A different generating set of the same span gives the same basis.
    ExactMatrix doubled = a.basis();
    for (std::size_t i = 0; i + 1 < doubled.rows(); ++i)
      for (std::size_t j = 0; j < 3; ++j) doubled(i, j) += 2 * doubled(i + 1, j);
    EXPECT_EQ(Subspace::span(doubled), a);
  }
}

TEST(Projection, Examples) {
  const std::vector<std::vector<Rational>> e1{{1, 0}};
  EXPECT_EQ(projection_matrix(Subspace::span(2, e1)), (ExactMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(projection_matrix(Subspace(2)), ExactMatrix(2, 2));
  const std::vector<std::vector<Rational>> diag{{1, 1}};
  const Rational h(1, 2);
  EXPECT_EQ(projection_matrix(Subspace::span(2, diag)), (ExactMatrix{{h, h}, {h, h}}));
}

TEST(Projection, SymmetricIdempotentWithRightImage) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactMatrix g = oracle::random_rational_matrix(rng, 5);
    const Subspace u = Subspace::span(g);
    const ExactMatrix p = projection_matrix(u);
    EXPECT_EQ(p, p.transpose());
    EXPECT_EQ(p * p, p);
    EXPECT_EQ(image(p), u);
  }
}

TEST(MultiQuad, SqrtEmbedExamples) {
  EXPECT_EQ(sqrt_embed(9), MultiQuadScalar(3));
  EXPECT_EQ(sqrt_embed(6), MultiQuadScalar::surd(1, 6));
  EXPECT_EQ(sqrt_embed(12), MultiQuadScalar::surd(2, 3));
  EXPECT_EQ(sqrt_embed(Rational(1, 2)), MultiQuadScalar::surd(Rational(1, 2), 2));
  EXPECT_THROW(sqrt_embed(-1), std::invalid_argument);
  EXPECT_EQ(sqrt_embed(12).str(), "2*sqrt(3)");
}

TEST(MultiQuad, ProductsOfSurds) {
  const auto r2 = sqrt_embed(2);
  const auto r3 = sqrt_embed(3);
  const auto r6 = sqrt_embed(6);
  EXPECT_EQ(r2 * r3, r6);
  EXPECT_EQ(r3 * r6, MultiQuadScalar::surd(3, 2));
  EXPECT_EQ(r2 * r2, MultiQuadScalar(2));
  EXPECT_EQ((r2 + r3).generators(), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE((r2 - r2).is_zero());
}

TEST(MultiQuad, SquareOfEmbeddedRootRecoversValue) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> num(0, 400);
  std::uniform_int_distribution<int> den(1, 60);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational r(num(rng), den(rng));
    const auto s = sqrt_embed(r);
    EXPECT_EQ(s * s, MultiQuadScalar(r));
  }
}

TEST(MultiQuad, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-5, 5);
  const std::uint64_t keys[] = {1, 2, 3, 5, 6, 10, 15, 30};
  auto random_scalar = [&] {
    MultiQuadScalar x;
    for (auto k : keys)
      if (coef(rng) > 1) x += MultiQuadScalar::surd(Rational(coef(rng), 1 + (coef(rng) + 5) % 3), k);
    return x;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_scalar();
    const auto b = random_scalar();
    const auto c = random_scalar();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), MultiQuadScalar(1));
  }
}

TEST(MatrixIo, ParsesCommentsAndFractions) {
  const ExactMatrix m = parse_matrix("# header\n2 2\n1 -1/2  # first row\n0 3\n");
  EXPECT_EQ(m, (ExactMatrix{{1, Rational(-1, 2)}, {0, 3}}));
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_THROW(parse_matrix("2 2\n1 2 3\n"), std::invalid_argument);
  EXPECT_THROW(parse_matrix("1 1\n1/0\n"), std::invalid_argument);
  EXPECT_THROW(parse_matrix("1 1\n0.5\n"), std::invalid_argument);
}

}  // namespace
}  // namespace psdrank
