#include "nullcone/invariants.hpp"

#include <gtest/gtest.h>

using namespace nullcone;

namespace {

std::vector<SimpleType> realized_types() {
  std::vector<SimpleType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 4; ++n) out.push_back({Family::B, n});
  for (int n = 3; n <= 4; ++n) out.push_back({Family::C, n});
  return out;
}

std::vector<SimpleType> small_types() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 3}};
}

Matrix mat2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Rational binomial(long n, long k) {
  Rational r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational rpow(const Rational& a, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= a;
  return r;
}

HPoint random_point(Rng& rng, std::size_t n) {
  HPoint p(n);
  for (auto& c : p) c = rng.uniform(-4, 4);
  return p;
}

}  // namespace

TEST(Algebra, DimensionsAndDegrees) {
  for (const auto& t : realized_types()) {
    const auto alg = build_algebra(t);
    const std::size_t b = alg.dim_borel(), rk = alg.rank();
    EXPECT_EQ(alg.dim(), rk + 2 * alg.dim_nilradical()) << t.name();
    EXPECT_EQ(alg.b_basis().size(), b);
    EXPECT_EQ(alg.u_basis().size(), b - rk);
    int sum = 0;
    for (int d : alg.degrees()) sum += d;
    EXPECT_EQ(static_cast<std::size_t>(sum), b) << t.name();
    EXPECT_EQ(alg.sigma_length(), b + rk);
    EXPECT_TRUE(std::is_sorted(alg.degrees().begin(), alg.degrees().end()));
  }
  EXPECT_EQ(build_algebra({Family::A, 1}).dim(), 3u);
  EXPECT_EQ(build_algebra({Family::A, 2}).degrees(), (std::vector<int>{2, 3}));
  EXPECT_EQ(build_algebra({Family::C, 3}).degrees(), (std::vector<int>{2, 4, 6}));
}

TEST(Algebra, RejectsUnsupportedTypes) {
  for (SimpleType t : {SimpleType{Family::D, 4}, SimpleType{Family::E, 6}, SimpleType{Family::G, 2},
                       SimpleType{Family::F, 4}, SimpleType{Family::A, 9}, SimpleType{Family::B, 5},
                       SimpleType{Family::C, 5}})
    EXPECT_THROW(build_algebra(t), UnsupportedAlgebra) << t.name();
  EXPECT_THROW(build_algebra({Family::C, 2}), InvalidType);
}

TEST(Algebra, BasisIsAdaptedToRoots) {
  for (const auto& t : realized_types()) {
    if (t.rank > 5) continue;
    const auto alg = build_algebra(t);
    const auto& rs = alg.root_system();
    for (const Matrix& b : alg.basis()) EXPECT_TRUE(alg.contains(b));
    for (const Matrix& h : alg.h_basis()) EXPECT_TRUE(alg.in_cartan(h));
    for (const Matrix& u : alg.u_basis()) EXPECT_TRUE(alg.in_nilradical(u));
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      // beta_j(H_i) = C[i][j]
      const auto v = alg.root_values(alg.coroot(i));
      for (std::size_t j = 0; j < rs.rank(); ++j) EXPECT_EQ(v[j], rs.cartan(i, j)) << t.name();
      EXPECT_EQ(commutator(alg.simple_e(i), alg.simple_f(i)), alg.coroot(i));
    }
    const auto& roots = rs.positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        Rational g = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) g += roots[k].coords[j] * rs.cartan(i, j);
        EXPECT_EQ(commutator(alg.coroot(i), alg.positive_root_vector(k)), alg.positive_root_vector(k) * g);
        EXPECT_EQ(commutator(alg.coroot(i), alg.negative_root_vector(k)), alg.negative_root_vector(k) * (-g));
      }
  }
}

TEST(Algebra, KillingFormIsProportionalToTraceForm) {
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const auto& basis = alg.basis();
    // ad matrices in basis coordinates
    std::vector<Matrix> ad;
    for (const Matrix& x : basis) {
      Matrix m(basis.size(), basis.size());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto c = alg.coordinates(commutator(x, basis[k]));
        for (std::size_t r = 0; r < basis.size(); ++r) m(r, k) = c[r];
      }
      ad.push_back(m);
    }
    for (std::size_t a = 0; a < basis.size(); a += 2)
      for (std::size_t b = 0; b < basis.size(); b += 3)
        EXPECT_EQ((ad[a] * ad[b]).trace(), alg.killing_ratio() * alg.trace_form(basis[a], basis[b])) << t.name();
  }
}

TEST(Algebra, CoordinatesRoundTrip) {
  Rng rng(3);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const Matrix x = alg.random_element(rng);
    EXPECT_EQ(alg.from_coordinates(alg.coordinates(x)), x);
    EXPECT_THROW(alg.coordinates(Matrix::identity(alg.matrix_size())), std::invalid_argument);
    const Matrix b = alg.random_borel(rng);
    EXPECT_EQ(alg.cartan_part(b) + alg.nilpotent_part(b), b);
    EXPECT_TRUE(alg.in_cartan(alg.cartan_part(b)));
    EXPECT_TRUE(alg.in_nilradical(alg.nilpotent_part(b)));
  }
}

TEST(Algebra, CartanElementFromRootValues) {
  Rng rng(4);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const HPoint v = random_point(rng, alg.rank());
    EXPECT_EQ(alg.root_values(alg.cartan_element(v)), v);
    const Matrix h = alg.grading_element();
    for (std::size_t i = 0; i < alg.rank(); ++i)
      EXPECT_EQ(commutator(h, alg.simple_e(i)), alg.simple_e(i));
  }
}

TEST(Algebra, WeylRepresentativesActOnCartan) {
  Rng rng(5);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const auto& rs = alg.root_system();
    const WeylGroup group(rs);
    for (const auto& w : group.elements()) {
      const Matrix n = alg.weyl_representative(w);
      const HPoint v = random_point(rng, alg.rank());
      const Matrix h = MatrixLieAlgebra::conjugate(n, alg.cartan_element(v));
      ASSERT_TRUE(alg.in_cartan(h));
      EXPECT_EQ(alg.root_values(h), w.apply(rs, v));
    }
  }
}

TEST(Algebra, RegularityByCentralizerDimension) {
  const auto sl2 = build_algebra({Family::A, 1});
  EXPECT_TRUE(sl2.is_regular(mat2(1, 0, 0, -1)));
  EXPECT_TRUE(sl2.is_regular(mat2(0, 1, 0, 0)));
  EXPECT_FALSE(sl2.is_regular(Matrix(2, 2)));
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    EXPECT_TRUE(alg.is_regular_nilpotent(alg.principal_nilpotent())) << t.name();
    if (alg.rank() > 1) {
      EXPECT_FALSE(alg.is_regular(alg.positive_root_vector(alg.dim_nilradical() - 1))) << t.name();
    }
  }
}

TEST(Algebra, ExpNilpotent) {
  const Matrix e = mat2(0, 1, 0, 0);
  EXPECT_EQ(exp_nilpotent(e), mat2(1, 1, 0, 1));
  EXPECT_THROW(exp_nilpotent(mat2(1, 0, 0, -1)), std::invalid_argument);
}

TEST(Invariants, Sl2Examples) {
  const auto alg = build_algebra({Family::A, 1});
  EXPECT_EQ(eval_p(alg, 0, Matrix(2, 2)), 0);
  EXPECT_EQ(eval_p(alg, 0, mat2(0, 1, 0, 0)), 0);
  EXPECT_EQ(eval_p(alg, 0, mat2(1, 0, 0, -1)), -1);
  EXPECT_EQ(polarize(alg, 0, mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)), (std::vector<Rational>{0, -1, 0}));
  EXPECT_EQ(sigma(alg, mat2(1, 0, 0, -1), mat2(1, 0, 0, -1)), (SigmaVector{-1, -2, -1}));
  EXPECT_EQ(epsilon(alg, 0, mat2(1, 2, 3, -1)), -mat2(1, 2, 3, -1));
}

TEST(Invariants, HomogeneityAndConjugationInvariance) {
  Rng rng(6);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    for (int rep = 0; rep < 3; ++rep) {
      const Matrix x = alg.random_element(rng);
      const Rational c = rng.rational(-3, 3, 2);
      const Matrix gu = alg.random_unipotent(rng, true), gl = alg.random_unipotent(rng, false);
      const Matrix gt = alg.random_torus(rng);
      for (std::size_t i = 0; i < alg.rank(); ++i) {
        const Rational p = eval_p(alg, i, x);
        EXPECT_EQ(eval_p(alg, i, x * c), rpow(c, alg.degree(i)) * p);
        EXPECT_EQ(eval_p(alg, i, MatrixLieAlgebra::conjugate(gu, x)), p);
        EXPECT_EQ(eval_p(alg, i, MatrixLieAlgebra::conjugate(gl, x)), p);
        EXPECT_EQ(eval_p(alg, i, MatrixLieAlgebra::conjugate(gt, x)), p);
      }
    }
  }
}

TEST(Invariants, GroupElementsPreserveTheAlgebra) {
  Rng rng(7);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const Matrix g = alg.random_torus(rng) * alg.random_unipotent(rng) * alg.weyl_representative(0);
    EXPECT_TRUE(alg.contains(MatrixLieAlgebra::conjugate(g, alg.random_element(rng)))) << t.name();
  }
}

TEST(Polarization, IdentityAtHeldOutPoints) {
  Rng rng(8);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const Matrix x = alg.random_element(rng), y = alg.random_element(rng);
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      const auto p = polarize(alg, i, x, y);
      const long d = alg.degree(i);
      ASSERT_EQ(p.size(), static_cast<std::size_t>(d + 1));
      EXPECT_EQ(p.front(), eval_p(alg, i, x));
      EXPECT_EQ(p.back(), eval_p(alg, i, y));
      for (int k = 0; k < 10; ++k) {
        const Rational a = rng.rational(-5, 5, 3), b = rng.rational(-5, 5, 3);
        Rational rhs = 0;
        for (long n = 0; n <= d; ++n) rhs += rpow(a, d - n) * rpow(b, n) * p[static_cast<std::size_t>(n)];
        EXPECT_EQ(eval_p(alg, i, x * a + y * b), rhs);
      }
    }
  }
}

TEST(Polarization, DiagonalAndZeroArguments) {
  Rng rng(9);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const Matrix x = alg.random_element(rng), zero(alg.matrix_size(), alg.matrix_size());
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      const auto p = polarize(alg, i, x, x), q = polarize(alg, i, x, zero);
      const Rational px = eval_p(alg, i, x);
      for (std::size_t n = 0; n < p.size(); ++n) {
        EXPECT_EQ(p[n], binomial(alg.degree(i), static_cast<long>(n)) * px);
        EXPECT_EQ(q[n], n == 0 ? px : Rational(0));
      }
    }
  }
}

TEST(Sigma, ZeroOnNilradicalPairs) {
  Rng rng(10);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const Matrix zero(alg.matrix_size(), alg.matrix_size());
    EXPECT_EQ(sigma(alg, zero, zero), SigmaVector(alg.sigma_length(), Rational(0)));
    const auto s = sigma(alg, alg.random_nilradical(rng), alg.random_nilradical(rng));
    EXPECT_EQ(s, SigmaVector(alg.sigma_length(), Rational(0))) << t.name();
  }
}

TEST(Sigma, WeylInvarianceOnCartanPairs) {
  Rng rng(11);
  for (SimpleType t : {SimpleType{Family::A, 1}, SimpleType{Family::A, 2}, SimpleType{Family::B, 2}}) {
    const auto alg = build_algebra(t);
    const auto& rs = alg.root_system();
    const WeylGroup group(rs);
    for (int rep = 0; rep < 5; ++rep) {
      const HPoint x = random_point(rng, rs.rank()), y = random_point(rng, rs.rank());
      const auto s = sigma(alg, alg.cartan_element(x), alg.cartan_element(y));
      for (const auto& w : group.elements())
        EXPECT_EQ(sigma(alg, alg.cartan_element(w.apply(rs, x)), alg.cartan_element(w.apply(rs, y))), s);
    }
  }
}

TEST(Sigma, GroupInvariance) {
  Rng rng(12);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    for (int rep = 0; rep < 2; ++rep) {
      const Matrix x = alg.random_element(rng), y = alg.random_element(rng);
      const Matrix g = alg.random_torus(rng) * alg.random_unipotent(rng, true) * alg.random_unipotent(rng, false);
      EXPECT_EQ(sigma(alg, MatrixLieAlgebra::conjugate(g, x), MatrixLieAlgebra::conjugate(g, y)), sigma(alg, x, y));
    }
  }
}

TEST(Sigma, DependsOnlyOnCartanPartsInBorel) {
  Rng rng(13);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    for (int rep = 0; rep < 3; ++rep) {
      const Matrix x = alg.random_borel(rng), y = alg.random_borel(rng);
      EXPECT_EQ(sigma(alg, x, y), sigma(alg, alg.cartan_part(x), alg.cartan_part(y))) << t.name();
    }
  }
}

TEST(Epsilon, MatchesDirectionalDerivatives) {
  Rng rng(14);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const Matrix x = alg.random_element(rng);
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      const Matrix e = epsilon(alg, i, x);
      EXPECT_TRUE(alg.contains(e));
      for (int k = 0; k < 3; ++k) {
        const Matrix v = alg.random_element(rng);
        EXPECT_EQ(alg.trace_form(e, v), directional_derivative(alg, i, x, v));
      }
      // Euler identity
      EXPECT_EQ(alg.trace_form(e, x), alg.degree(i) * eval_p(alg, i, x)) << t.name();
      EXPECT_TRUE(epsilon(alg, i, Matrix(alg.matrix_size(), alg.matrix_size())).is_zero());
    }
  }
}

TEST(Epsilon, PolarizationIdentity) {
  Rng rng(15);
  for (const auto& t : small_types()) {
    const auto alg = build_algebra(t);
    const Matrix x = alg.random_element(rng), y = alg.random_element(rng);
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      const auto e = epsilon_polarize(alg, i, x, y);
      ASSERT_EQ(e.size(), static_cast<std::size_t>(alg.degree(i)));
      EXPECT_EQ(e.front(), epsilon(alg, i, x));
      const Rational tt = rng.rational(-4, 4, 3);
      EXPECT_EQ(evaluate_polynomial<Matrix>(e, tt), epsilon(alg, i, x + y * tt));
    }
  }
}

TEST(BorelSpan, Sl2) {
  const auto alg = build_algebra({Family::A, 1});
  const Matrix h = mat2(1, 0, 0, -1);
  const auto span = borel_span(alg, h, h + mat2(0, 1, 0, 0));
  EXPECT_EQ(span.dim(), 2u);
  for (const Matrix& b : span.basis) EXPECT_TRUE(alg.in_borel(b));
  // A pencil spanned by a single element does not meet the precondition.
  EXPECT_THROW(borel_span(alg, h, h), PreconditionError);
  EXPECT_THROW(borel_span(alg, Matrix(2, 2), h), PreconditionError);
}

TEST(BorelSpan, GenericSl3PairsSpanTheBorel) {
  Rng rng(16);
  const auto alg = build_algebra({Family::A, 2});
  int accepted = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix x = alg.random_borel(rng), y = alg.random_borel(rng);
    if (pencil_irregularity(alg, x, y)) continue;
    ++accepted;
    const auto span = borel_span(alg, x, y);
    EXPECT_EQ(span.dim(), 5u);
    auto all = alg.b_basis();
    all.insert(all.end(), span.basis.begin(), span.basis.end());
    EXPECT_EQ(span_dimension(all), 5u);
  }
  EXPECT_GT(accepted, 0);
}

TEST(BorelSpan, PencilWithNonRegularMemberOffTheIntegersIsRejected) {
  const auto alg = build_algebra({Family::A, 2});
  Matrix x(3, 3), y(3, 3);
  x(0, 1) = 3;
  x(0, 2) = -2;
  x(1, 1) = -1;
  x(2, 2) = 1;
  y(0, 0) = 1;
  y(0, 2) = -3;
  y(1, 1) = -3;
  y(2, 2) = 2;
  // x - (2/5) y has a repeated eigenvalue 1/5 with a two-dimensional eigenspace.
  EXPECT_FALSE(alg.is_regular(x - y * make_rational(2, 5)));
  for (long t = -6; t <= 6; ++t) EXPECT_TRUE(alg.is_regular(x + y * Rational(t)));
  const auto why = pencil_irregularity(alg, x, y);
  ASSERT_TRUE(why.has_value());
  EXPECT_THROW(borel_span(alg, x, y), PreconditionError);
}

TEST(BorelSpan, RejectsNonRegularInput) {
  const auto alg = build_algebra({Family::A, 2});
  const Matrix x = alg.positive_root_vector(2);  // highest root vector, not regular
  try {
    borel_span(alg, x, alg.principal_nilpotent() + alg.grading_element());
    FAIL() << "expected rejection";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness(), "x is not regular");
  }
  EXPECT_THROW(borel_span(alg, alg.negative_root_vector(0), alg.principal_nilpotent()), PreconditionError);
}
