#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "relrigid/error.hpp"
#include "relrigid/field.hpp"
#include "relrigid/linalg.hpp"
#include "relrigid/matrix.hpp"

using namespace relrigid;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, const Field& f, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(d(rng)));
  }
  return m;
}

// Leibniz expansion; independent of elimination.
Rational det_oracle(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) term = m.field().mul(term, m(i, perm[i]));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    total = inversions % 2 ? m.field().sub(total, term) : m.field().add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_oracle(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (rsel[i]) rows.push_back(i);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (csel[j]) cols.push_back(j);
        }
        if (det_oracle(m.select_rows(rows).select_columns(cols)) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

}  // namespace

TEST(Field, PrimeArithmetic) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.add(5, 4), 2);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.inverse(3), 5);
  EXPECT_EQ(f.reduce(Rational(1, 2)), 4);
  EXPECT_EQ(f.neg(0), 0);
  EXPECT_THROW(f.inverse(0), Error);
}

TEST(Field, Parse) {
  EXPECT_TRUE(parse_field("q").is_rational());
  EXPECT_EQ(parse_field("fp:11").characteristic(), 11u);
  EXPECT_THROW(parse_field("fp:"), InputError);
  EXPECT_THROW(parse_field("r"), InputError);
  EXPECT_THROW(parse_field("fp:12"), InputError);
}

TEST(Linalg, SmallExamples) {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(a), 2u);
  const Matrix k = kernel_basis(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_FALSE(is_invertible(a));
  const Matrix b = Matrix::from_rows({{2, 1}, {1, 1}});
  const auto inv = inverse(b);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(b * *inv, Matrix::identity(2));
  EXPECT_EQ(rank(Matrix(0, 4)), 0u);
  EXPECT_EQ(kernel_basis(Matrix(0, 3)).cols(), 3u);
}

TEST(Linalg, CharacteristicPolynomialAndRoots) {
  const Matrix m = Matrix::from_rows({{2, 0, 0}, {1, 3, 0}, {0, 0, 3}});
  const auto c = characteristic_polynomial(m);
  // (x - 2)(x - 3)^2 = x^3 - 8x^2 + 21x - 18
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], -18);
  EXPECT_EQ(c[1], 21);
  EXPECT_EQ(c[2], -8);
  EXPECT_EQ(c[3], 1);
  auto roots = rational_roots(c);
  std::sort(roots.begin(), roots.end());
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], 2);
  EXPECT_EQ(roots[1], 3);
  EXPECT_TRUE(rational_roots({Rational(-1, 1), 0, Rational(2)}).empty());
}

TEST(Linalg, SubspaceOperations) {
  Subspace w(Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}}), 3);
  EXPECT_EQ(w.dim(), 2u);
  EXPECT_TRUE(w.contains(Matrix::column_vector({2, 3, 5})));
  EXPECT_FALSE(w.contains(Matrix::column_vector({0, 0, 1})));
  EXPECT_TRUE((w.quotient_map() * w.basis()).is_zero());
  w.add(Matrix::column_vector({0, 0, 1}));
  EXPECT_TRUE(w.is_full());
}

class LinalgProperty : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperty, RankMatchesMinorOracle) {
  const Field f = GetParam() == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(GetParam()));
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    Matrix m = random_matrix(rng, r, c, f);
    if (trial % 3 == 0 && r > 1) m.set_block(r - 1, 0, m.block(0, 0, 1, c).scaled(2));
    const std::size_t rk = rank(m);
    EXPECT_EQ(rk, rank_oracle(m));
    const Matrix k = kernel_basis(m);
    EXPECT_EQ(rk + k.cols(), c);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(image_basis(m).cols(), rk);
    EXPECT_EQ(rank(m.transpose()), rk);
  }
}

TEST_P(LinalgProperty, SolveAndInverse) {
  const Field f = GetParam() == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(GetParam()));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix m = random_matrix(rng, n, n, f);
    const Matrix x = random_matrix(rng, n, 1, f);
    const Matrix b = m * x;
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, b);
    EXPECT_TRUE(in_column_span(m, b));
    EXPECT_EQ(is_invertible(m), det_oracle(m) != 0);
    if (auto inv = inverse(m)) EXPECT_EQ(*inv * m, Matrix::identity(n, f));
  }
}

TEST_P(LinalgProperty, ComplementAndLeftInverse) {
  const Field f = GetParam() == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(GetParam()));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix basis = image_basis(random_matrix(rng, 5, 3, f));
    const Matrix comp = complement_basis(basis);
    EXPECT_EQ(basis.cols() + comp.cols(), 5u);
    EXPECT_EQ(rank(Matrix::hstack({basis, comp}, 5, f)), 5u);
    EXPECT_EQ(left_inverse(basis) * basis, Matrix::identity(basis.cols(), f));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, LinalgProperty, ::testing::Values(0, 2, 7, 101));
