#include <gtest/gtest.h>

#include <random>

#include "grmlab/errors.hpp"
#include "grmlab/field.hpp"
#include "grmlab/matrix.hpp"

using namespace grmlab;

namespace {

Matrix random_matrix(PrimeField f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.p() - 1);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Every vector of F_p^n.
std::vector<Vector> all_vectors(PrimeField f, std::size_t n) {
  std::vector<Vector> out{Vector(n, 0)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vector> next;
    for (const auto& v : out) {
      for (std::uint32_t x = 0; x < f.p(); ++x) {
        auto w = v;
        w[k] = x;
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Field, ArithmeticAndInverse) {
  PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_THROW(PrimeField(4), std::exception);
  EXPECT_THROW(PrimeField(1), std::exception);
}

TEST(Rational, LowestTermsAndOrder) {
  Rational a(6, -4);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(Rational::parse("4").to_string(), "4/1");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_THROW(Rational::parse("1/0"), MalformedInput);
  EXPECT_THROW(Rational::parse("x"), MalformedInput);
}

TEST(Reduce, Examples) {
  PrimeField f(2);
  auto id = reduce(Matrix::identity(f, 2));
  EXPECT_EQ(id.rref, Matrix::identity(f, 2));
  EXPECT_EQ(id.rank, 2u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

  auto z = reduce(Matrix(f, 3, 2));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.pivots.empty());
  EXPECT_TRUE(z.rref.is_zero());

  auto ones = reduce(Matrix::from_rows(f, {{1, 1}, {1, 1}}));
  EXPECT_EQ(ones.rref, Matrix::from_rows(f, {{1, 1}, {0, 0}}));
  EXPECT_EQ(ones.rank, 1u);
}

TEST(Kernel, Examples) {
  PrimeField f(2);
  EXPECT_TRUE(kernel_basis(Matrix::identity(f, 3)).is_zero());
  EXPECT_TRUE(kernel_basis(Matrix(f, 3, 3)).is_full());
  auto k = kernel_basis(Matrix::from_rows(f, {{1, 1}}));
  // Oracle: enumerate F_2^2.
  std::size_t count = 0;
  for (const auto& v : all_vectors(f, 2)) {
    bool in_kernel = f.add(v[0], v[1]) == 0;
    EXPECT_EQ(k.contains(v), in_kernel);
    count += in_kernel;
  }
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(k, Subspace::span(f, 2, std::vector<Vector>{{1, 1}}));
}

TEST(Solve, Examples) {
  PrimeField f(2);
  Vector b{1, 0};
  EXPECT_EQ(*solve(Matrix::identity(f, 2), b), b);
  EXPECT_FALSE(solve(Matrix(f, 2, 2), b).has_value());
  auto a = Matrix::from_rows(f, {{1, 1}, {0, 0}});
  auto x = solve(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE((*x == Vector{1, 0}) || (*x == Vector{0, 1}));
  EXPECT_THROW(solve(a, Vector{1, 0, 0}), DimensionMismatch);
}

TEST(MeetJoin, Examples) {
  PrimeField f(2);
  auto u = Subspace::span(f, 2, std::vector<Vector>{{1, 0}});
  auto v = Subspace::span(f, 2, std::vector<Vector>{{0, 1}});
  auto uu = subspace_meet_join(u, u);
  EXPECT_EQ(uu.intersection, u);
  EXPECT_EQ(uu.sum, u);
  auto fz = subspace_meet_join(Subspace::full(f, 2), Subspace(f, 2));
  EXPECT_TRUE(fz.intersection.is_zero());
  EXPECT_TRUE(fz.sum.is_full());
  auto uv = subspace_meet_join(u, v);
  EXPECT_TRUE(uv.intersection.is_zero());
  EXPECT_TRUE(uv.sum.is_full());
  EXPECT_THROW(subspace_meet_join(u, Subspace(f, 3)), DimensionMismatch);
}

TEST(QuotientData, Examples) {
  PrimeField f(2);
  auto q0 = quotient_data(3, Subspace(f, 3));
  EXPECT_EQ(q0.projection, Matrix::identity(f, 3));
  EXPECT_EQ(quotient_data(3, Subspace::full(f, 3)).projection.rows(), 0u);
  auto u = Subspace::span(f, 2, std::vector<Vector>{{1, 1}});
  auto q = quotient_data(2, u);
  EXPECT_EQ(q.projection.rows(), 1u);
  EXPECT_EQ(q.projection * q.lift, Matrix::identity(f, 1));
}

TEST(LinalgProperties, RankNullity) {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = rng() % 6, c = rng() % 6;
      auto m = random_matrix(f, r, c, rng);
      auto k = kernel_basis(m);
      EXPECT_EQ(rank(m) + k.dim(), c);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        auto img = m * k.basis().row(i);
        for (auto x : img) EXPECT_EQ(x, 0u);
      }
    }
  }
}

TEST(LinalgProperties, CanonicalFormIndependentOfPresentation) {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 5;
      auto a = random_matrix(f, 3, n, rng);
      auto b = random_matrix(f, 2, n, rng);
      auto u = Subspace::row_space(a);
      auto v = Subspace::row_space(b);
      // Re-present u and v by random invertible recombinations of their bases.
      auto reshuffle = [&](const Subspace& s) {
        while (true) {
          auto g = random_matrix(f, s.dim(), s.dim(), rng);
          if (rank(g) == s.dim()) return Subspace::row_space(g * s.basis());
        }
      };
      auto u2 = reshuffle(u);
      auto v2 = reshuffle(v);
      EXPECT_EQ(u, u2);
      auto mj = subspace_meet_join(u, v);
      auto mj2 = subspace_meet_join(u2, v2);
      EXPECT_EQ(mj.intersection, mj2.intersection);
      EXPECT_EQ(mj.sum, mj2.sum);
      EXPECT_EQ(mj.intersection.dim() + mj.sum.dim(), u.dim() + v.dim());
    }
  }
}

TEST(LinalgProperties, QuotientKernelIsExactlyU) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 5;
      auto u = Subspace::row_space(random_matrix(f, rng() % (n + 1), n, rng));
      auto q = quotient_data(n, u);
      EXPECT_EQ(q.projection * q.lift, Matrix::identity(f, n - u.dim()));
      auto ker = kernel_basis(q.projection);
      EXPECT_TRUE(ker.contains(u));
      EXPECT_TRUE(u.contains(ker));
    }
  }
}

TEST(LinalgProperties, InverseAndSolve) {
  std::mt19937_64 rng(4);
  PrimeField f(3);
  for (int t = 0; t < 40; ++t) {
    auto m = random_matrix(f, 4, 4, rng);
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == 4);
    if (inv) EXPECT_EQ(m * *inv, Matrix::identity(f, 4));
    Vector b{1, 2, 0, 1};
    auto x = solve(m, b);
    if (x) EXPECT_EQ(m * *x, b);
  }
}
