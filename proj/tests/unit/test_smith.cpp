#include <gtest/gtest.h>

#include <numeric>

#include "edmf/sampling.hpp"
#include "edmf/smith.hpp"

namespace {

using namespace edmf;

const Ring Z = Ring::integers();

Element z(long v) { return Z.from_int(v); }

std::vector<Element> zs(std::initializer_list<long> vs) {
  std::vector<Element> out;
  for (long v : vs) out.push_back(z(v));
  return out;
}

void expect_certified(const Matrix& a, const SmithDecomposition& s) {
  ASSERT_EQ(s.U * a, s.D * s.V);
  ASSERT_EQ(s.U * a * s.V_inv, s.D);
  ASSERT_EQ(s.V * s.V_inv, Matrix::identity(a.ring(), a.cols()));
  ASSERT_TRUE(determinant(s.U).is_unit());
  ASSERT_TRUE(determinant(s.V).is_unit());
  ASSERT_TRUE(s.D.is_diagonal());
  for (std::size_t i = 0; i < s.rank; ++i) {
    ASSERT_EQ(s.D(i, i), s.invariant_factors[i]);
    ASSERT_FALSE(s.D(i, i).is_zero());
    ASSERT_TRUE(is_canonical(s.D(i, i)));
    if (i > 0) ASSERT_TRUE(divides(s.D(i - 1, i - 1), s.D(i, i)));
  }
  for (std::size_t i = s.rank; i < std::min(a.rows(), a.cols()); ++i) ASSERT_TRUE(s.D(i, i).is_zero());
}

// Independent integer oracle: gcd of k x k minors by Laplace expansion on
// plain mpz values.
mpz_class det_mpz(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const mpz_class term = m[0][j] * det_mpz(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

std::vector<mpz_class> minor_gcds(const Matrix& a) {
  std::vector<mpz_class> deltas{1};
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    mpz_class g = 0;
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<mpz_class>> sub;
        for (std::size_t i = 0; i < m; ++i) {
          if (!rsel[i]) continue;
          std::vector<mpz_class> row;
          for (std::size_t j = 0; j < n; ++j)
            if (csel[j]) row.push_back(a(i, j).integer());
          sub.push_back(row);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det_mpz(sub).get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    deltas.push_back(g);
  }
  return deltas;
}

TEST(Smith, SpecExample) {
  const Matrix a = Matrix::from_ints(Z, {{2, 4}, {6, 8}});
  const auto s = smith(a);
  expect_certified(a, s);
  EXPECT_EQ(s.invariant_factors, zs({2, 4}));
  EXPECT_EQ(s.rank, 2u);
}

TEST(Smith, PermutationGivesIdentity) {
  const Matrix p = Matrix::from_ints(Z, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const auto s = smith(p);
  expect_certified(p, s);
  EXPECT_EQ(s.D, Matrix::identity(Z, 3));
}

TEST(Smith, PolynomialExample) {
  const Ring g = Ring::polynomials(5);
  const Element x = g.variable();
  const Matrix a(g, 2, 2, {x, x * x, g.zero(), x});
  const auto s = smith(a);
  expect_certified(a, s);
  // delta_1 = x, delta_2 = det = x^2, so both invariant factors are x.
  EXPECT_EQ(s.invariant_factors, (std::vector<Element>{x, x}));
}

TEST(Smith, ZeroAndEmptyShapes) {
  const Matrix zero(Z, 2, 3);
  const auto s = smith(zero);
  expect_certified(zero, s);
  EXPECT_EQ(s.rank, 0u);

  for (auto [m, n] : {std::pair{0, 3}, std::pair{3, 0}, std::pair{0, 0}}) {
    const Matrix e(Z, m, n);
    const auto se = smith(e);
    EXPECT_EQ(se.rank, 0u);
    EXPECT_EQ(se.U.rows(), static_cast<std::size_t>(m));
    EXPECT_EQ(se.V.rows(), static_cast<std::size_t>(n));
  }
}

TEST(Smith, RectangularAndChainRepair) {
  const Matrix a = Matrix::from_ints(Z, {{2, 0, 0}, {0, 3, 0}});
  const auto s = smith(a);
  expect_certified(a, s);
  EXPECT_EQ(s.invariant_factors, zs({1, 6}));

  const Matrix b = Matrix::from_ints(Z, {{4, 0}, {0, 6}, {0, 0}});
  const auto sb = smith(b);
  expect_certified(b, sb);
  EXPECT_EQ(sb.invariant_factors, zs({2, 12}));
}

TEST(Smith, DeterminantalInvariants) {
  const auto d = determinantal_invariants(Matrix::from_ints(Z, {{2, 4}, {6, 8}}));
  EXPECT_EQ(d.delta, zs({1, 2, 8}));
  EXPECT_TRUE(d.from_minors);

  const auto id = determinantal_invariants(Matrix::identity(Z, 3));
  EXPECT_EQ(id.delta, zs({1, 1, 1, 1}));

  const auto zero = determinantal_invariants(Matrix(Z, 2, 2));
  EXPECT_EQ(zero.delta, zs({1}));
  EXPECT_EQ(zero.rank, 0u);

  Sampler sampler(5);
  const auto big = determinantal_invariants(sampler.matrix(Z, 6, 6, 5));
  EXPECT_FALSE(big.from_minors);
}

TEST(Smith, InvariantFactorsViaDelta) {
  EXPECT_EQ(invariant_factors_via_delta(Matrix::from_ints(Z, {{2, 4}, {6, 8}})), zs({2, 4}));
  EXPECT_EQ(invariant_factors_via_delta(Matrix::from_ints(Z, {{3, 0, 0}, {0, 6, 0}, {0, 0, 0}})),
            zs({3, 6}));
  EXPECT_EQ(invariant_factors_via_delta(Matrix::from_ints(Z, {{2, 0}, {0, 3}})), zs({1, 6}));
}

TEST(Smith, Equivalent) {
  EXPECT_FALSE(equivalent(Matrix::from_ints(Z, {{2, 0}, {0, 4}}), Matrix::from_ints(Z, {{1, 0}, {0, 8}})));
  EXPECT_TRUE(equivalent(Matrix::from_ints(Z, {{2, 0}, {0, 3}}), Matrix::from_ints(Z, {{1, 0}, {0, 6}})));
  EXPECT_THROW(equivalent(Matrix(Z, 2, 2), Matrix(Z, 2, 3)), PreconditionError);

  Sampler sampler(9);
  for (int k = 0; k < 50; ++k) {
    const Matrix a = sampler.matrix(Z, 3, 4, 9);
    const auto U = sampler.unimodular(Z, 3, 6);
    const auto V = sampler.unimodular(Z, 4, 6);
    ASSERT_TRUE(equivalent(a, U.m * a * V.m));
  }
}

TEST(Smith, KernelAndCokernel) {
  const Matrix two = Matrix::from_ints(Z, {{2}});
  EXPECT_EQ(kernel_basis(two).cols(), 0u);
  EXPECT_EQ(image_cokernel_invariants(two).cyclic_factors, zs({2}));

  const Matrix ones = Matrix::from_ints(Z, {{1, 1}});
  const Matrix k = kernel_basis(ones);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((ones * k).is_zero());
  EXPECT_EQ(canonical(k(0, 0)), z(1));
  EXPECT_EQ(k(0, 0), -k(1, 0));
  EXPECT_TRUE(image_cokernel_invariants(ones).is_zero());

  const Matrix zero(Z, 2, 2);
  EXPECT_EQ(kernel_basis(zero).cols(), 2u);
  const auto free = image_cokernel_invariants(zero);
  EXPECT_EQ(free.cyclic_factors, zs({0, 0}));
  EXPECT_EQ(free.free_rank(), 2u);
}

TEST(Smith, KernelBasisIsSaturated) {
  Sampler sampler(21);
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = 1 + sampler.index(4), n = 1 + sampler.index(5);
    Matrix a = sampler.matrix(Z, m, n, 6);
    if (k % 3 == 0 && m > 1)  // force dependent rows
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = a(0, j) * z(2);
    const auto s = smith(a);
    const Matrix K = kernel_basis(a);
    ASSERT_EQ(K.cols(), n - s.rank);
    ASSERT_TRUE((a * K).is_zero());
    // Saturated free basis: the columns span a direct summand.
    if (K.cols() > 0) {
      const auto ks = smith(K);
      ASSERT_EQ(ks.rank, K.cols());
      for (const auto& d : ks.invariant_factors) ASSERT_TRUE(d.is_one());
    }
  }
}

TEST(Smith, Solve) {
  const Matrix a = Matrix::from_ints(Z, {{2, 0}, {0, 3}});
  const auto x = solve(a, Matrix::from_ints(Z, {{4}, {9}}));
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, Matrix::from_ints(Z, {{4}, {9}}));
  EXPECT_FALSE(solve(a, Matrix::from_ints(Z, {{1}, {0}})));

  Sampler sampler(4);
  for (int k = 0; k < 100; ++k) {
    const Matrix m = sampler.matrix(Z, 3, 4, 7);
    const Matrix y = sampler.matrix(Z, 4, 2, 7);
    const Matrix b = m * y;
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol);
    ASSERT_EQ(m * *sol, b);
  }
}

TEST(Smith, RandomIntegerOracle) {
  Sampler sampler(2024);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = 1 + sampler.index(5), n = 1 + sampler.index(5);
    const Matrix a = sampler.matrix(Z, m, n, 50);
    const auto s = smith(a);
    expect_certified(a, s);
    const auto deltas = minor_gcds(a);
    ASSERT_EQ(deltas.size() - 1, s.rank);
    for (std::size_t i = 0; i < s.rank; ++i)
      ASSERT_EQ(s.invariant_factors[i].integer(), deltas[i + 1] / deltas[i]);
  }
}

TEST(Smith, RandomPolynomialCertificates) {
  for (std::uint32_t p : {3u, 5u}) {
    const Ring g = Ring::polynomials(p);
    Sampler sampler(p);
    for (int k = 0; k < 60; ++k) {
      const std::size_t m = 1 + sampler.index(4), n = 1 + sampler.index(4);
      const Matrix a = sampler.matrix(g, m, n, 3);
      const auto s = smith(a);
      expect_certified(a, s);
      ASSERT_EQ(s.invariant_factors, invariant_factors_via_delta(a));
    }
  }
}

TEST(Smith, ModuleInvariantsChain) {
  const auto m = ModuleInvariants::from_chain(Z, zs({1, -2, 0, 4}));
  EXPECT_EQ(m.cyclic_factors, zs({2, 4, 0}));
  EXPECT_EQ(m.free_rank(), 1u);
  EXPECT_FALSE(m.annihilated_by(z(4)));
  const auto t = ModuleInvariants::from_chain(Z, zs({2, 4}));
  EXPECT_TRUE(t.annihilated_by(z(8)));
  EXPECT_FALSE(t.annihilated_by(z(2)));
  EXPECT_THROW(ModuleInvariants::from_chain(Z, zs({4, 6})), ValidationError);
}

}  // namespace
