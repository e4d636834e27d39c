#include "nullcone/interpolation.hpp"
#include "nullcone/linalg.hpp"
#include "nullcone/modular.hpp"

#include <gtest/gtest.h>

using namespace nullcone;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound = 4) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational(-bound, bound, 3);
  return m;
}

// Cofactor expansion, for comparison with elimination.
Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Rational term = m(0, j) * cofactor_det(minor);
    d += (j % 2 ? -term : term);
  }
  return d;
}

}  // namespace

TEST(Linalg, DeterminantMatchesCofactorExpansion) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix m = random_matrix(rng, n, n);
      EXPECT_EQ(determinant(m), cofactor_det(m));
    }
}

TEST(Linalg, CharacteristicPolynomialMatchesDeterminantInterpolation) {
  Rng rng(12);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      const Matrix m = random_matrix(rng, n, n);
      const auto c = characteristic_coefficients(m);
      ASSERT_EQ(c.size(), n + 1);
      EXPECT_EQ(c[0], 1);
      // det(tI - m) = sum_k c_k t^{n-k}
      const auto nodes = integer_nodes(n + 1);
      std::vector<Rational> values;
      for (const auto& t : nodes) values.push_back(determinant(Matrix::identity(n) * t - m));
      const auto coeffs = interpolate<Rational>(nodes, values);
      for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(coeffs[n - k], c[k]);
    }
}

TEST(Linalg, RankAgreesWithEchelonForm) {
  Rng rng(13);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6)), c = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    const Matrix m = random_matrix(rng, r, k) * random_matrix(rng, k, c);
    EXPECT_EQ(rank(m), rref(m).pivots.size());
    EXPECT_LE(rank(m), std::min({r, c, k}));
    EXPECT_EQ(rank(m) + nullspace(m).size(), c);
  }
}

TEST(Linalg, NullspaceVectorsAreKilled) {
  Rng rng(14);
  const Matrix m = random_matrix(rng, 3, 2) * random_matrix(rng, 2, 5);
  for (const auto& v : nullspace(m)) {
    Matrix col(5, 1);
    for (std::size_t i = 0; i < 5; ++i) col(i, 0) = v[i];
    EXPECT_TRUE((m * col).is_zero());
  }
}

TEST(Linalg, SolveAndInverse) {
  Rng rng(15);
  Matrix m = random_matrix(rng, 4, 4);
  while (determinant(m) == 0) m = random_matrix(rng, 4, 4);
  EXPECT_EQ(m * inverse(m), Matrix::identity(4));
  std::vector<Rational> b = {1, 2, 3, 4};
  auto x = solve(m, b);
  ASSERT_TRUE(x.has_value());
  Matrix col(4, 1);
  for (std::size_t i = 0; i < 4; ++i) col(i, 0) = (*x)[i];
  const Matrix mb = m * col;
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(mb(i, 0), b[i]);

  Matrix singular(2, 2);
  singular(0, 0) = 1;
  std::vector<Rational> rhs = {0, 1};
  EXPECT_FALSE(solve(singular, rhs).has_value());
}

TEST(Linalg, SpanOfMatrices) {
  std::vector<Matrix> vs = {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0), Matrix::unit(2, 0, 1) * Rational(3)};
  EXPECT_EQ(span_dimension(vs), 2u);
  EXPECT_EQ(span_basis(vs).size(), 2u);
}

TEST(Interpolation, RoundTripsPolynomials) {
  Rng rng(16);
  for (std::size_t d = 0; d <= 8; ++d) {
    std::vector<Rational> coeffs(d + 1);
    for (auto& c : coeffs) c = rng.rational(-5, 5, 4);
    std::vector<Rational> nodes;
    for (std::size_t k = 0; k <= d; ++k) nodes.push_back(make_rational(static_cast<long>(k) * 2 - 3, 2));
    std::vector<Rational> values;
    for (const auto& t : nodes) values.push_back(evaluate_polynomial<Rational>(coeffs, t));
    EXPECT_EQ(interpolate<Rational>(nodes, values), coeffs);
  }
}

TEST(Interpolation, MatrixValues) {
  const Matrix a = Matrix::unit(2, 0, 1), b = Matrix::identity(2);
  const auto nodes = integer_nodes(3);
  std::vector<Matrix> values;
  for (const auto& t : nodes) values.push_back(a + b * (t * t));
  const auto c = interpolate<Matrix>(nodes, values);
  EXPECT_EQ(c[0], a);
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_EQ(c[2], b);
}

TEST(Interpolation, RejectsRepeatedNodes) {
  std::vector<Rational> nodes = {0, 1, 1};
  EXPECT_THROW(interpolate<Rational>(nodes, std::vector<Rational>{0, 1, 2}), std::invalid_argument);
}

TEST(Interpolation, PolynomialGcd) {
  // (t - 1)(t + 2/5) and (t + 2/5)(t^2 + 1)
  const std::vector<Rational> a = {make_rational(-2, 5), make_rational(-3, 5), 1};
  const std::vector<Rational> b = {make_rational(2, 5), 1, make_rational(2, 5), 1};
  const auto g = polynomial_gcd(a, b);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], make_rational(2, 5));
  EXPECT_EQ(g[1], 1);
  EXPECT_EQ(polynomial_gcd({1, 1}, {2, 0, 1}).size(), 1u);
  EXPECT_TRUE(polynomial_remainder(b, g).empty());
}

TEST(Modular, CharpolyAndInverseMatchRationalReduction) {
  Rng rng(17);
  for (std::size_t n = 1; n <= 6; ++n) {
    Matrix m = random_matrix(rng, n, n);
    while (determinant(m) == 0) m = random_matrix(rng, n, n);
    const auto c = characteristic_coefficients(m);
    const auto cp = modp::charpoly(*modp::reduce(m));
    ASSERT_EQ(cp.size(), n + 1);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(cp[n - k], *modp::reduce(c[k]));
    const auto inv_p = modp::inverse(*modp::reduce(m));
    ASSERT_TRUE(inv_p.has_value());
    EXPECT_EQ(inv_p->a, modp::reduce(inverse(m))->a);
  }
  EXPECT_FALSE(modp::inverse(*modp::reduce(Matrix(2, 2))).has_value());
}

TEST(Rational, MakeRationalCanonicalizes) {
  EXPECT_EQ(make_rational(2, -4), make_rational(-1, 2));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}
