#include <gtest/gtest.h>

#include <random>

#include "cubicdet/linalg.hpp"

using namespace cubicdet;

namespace {

Mat3 random_mat(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  Mat3 m(f);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = f.element(d(rng));
  return m;
}

}  // namespace

TEST(Mat3, InverseAndDet) {
  std::mt19937 rng(7);
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {7u, 1u}, {3u, 2u}}) {
    const FieldSpec& f = mk_field(p, m);
    for (int i = 0; i < 200; ++i) {
      const Mat3 a = random_mat(f, rng), b = random_mat(f, rng);
      EXPECT_EQ((a * b).det(), a.det() * b.det());
      EXPECT_EQ(a.transpose().det(), a.det());
      EXPECT_EQ(a.rank() == 3, a.is_invertible());
      if (a.is_invertible()) {
        EXPECT_EQ(a * a.inverse(), Mat3::identity(f));
        EXPECT_EQ(a.inverse() * a, Mat3::identity(f));
      }
    }
  }
}

TEST(Mat3, SingularInverseThrows) {
  const FieldSpec& f = mk_field(5, 1);
  const Mat3 a(f, {{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}});
  EXPECT_EQ(a.rank(), 2);
  EXPECT_THROW(a.inverse(), Error);
}

TEST(Mat3, FromColumns) {
  const FieldSpec& f = mk_field(7, 1);
  const Mat3 a(f, {{{1, 2, 3}, {4, 5, 6}, {0, 1, 1}}});
  EXPECT_EQ(Mat3::from_columns(a.column(0), a.column(1), a.column(2)), a);
}

TEST(Gl3Order, Values) {
  EXPECT_EQ(gl3_order(2), 168u);
  EXPECT_EQ(gl3_order(3), 11232u);
  EXPECT_EQ(gl3_order(9), 728ULL * 720ULL * 648ULL);
}

TEST(DenseMatrix, NullspaceAndSolve) {
  std::mt19937 rng(11);
  const FieldSpec& f = mk_field(5, 1);
  for (int t = 0; t < 100; ++t) {
    DenseMatrix a(f, 4, 6);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) a.at(r, c) = rng() % 5;
    const auto ns = a.nullspace();
    EXPECT_EQ(ns.size() + a.rank(), 6u);
    for (const auto& v : ns) {
      for (std::size_t r = 0; r < 4; ++r) {
        std::uint32_t s = 0;
        for (std::size_t c = 0; c < 6; ++c) s = f.add(s, f.mul(a.at(r, c), v[c]));
        EXPECT_EQ(s, 0u);
      }
    }
    DenseMatrix x(f, 6, 1);
    for (std::size_t c = 0; c < 6; ++c) x.at(c, 0) = rng() % 5;
    DenseMatrix b(f, 4, 1);
    for (std::size_t r = 0; r < 4; ++r) {
      std::uint32_t s = 0;
      for (std::size_t c = 0; c < 6; ++c) s = f.add(s, f.mul(a.at(r, c), x.at(c, 0)));
      b.at(r, 0) = s;
    }
    const auto sol = solve(a, b);
    ASSERT_TRUE(sol);
    for (std::size_t r = 0; r < 4; ++r) {
      std::uint32_t s = 0;
      for (std::size_t c = 0; c < 6; ++c) s = f.add(s, f.mul(a.at(r, c), sol->at(c, 0)));
      EXPECT_EQ(s, b.at(r, 0));
    }
  }
}

TEST(DenseMatrix, Inconsistent) {
  const FieldSpec& f = mk_field(3, 1);
  DenseMatrix a(f, 2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  DenseMatrix b(f, 2, 1);
  b.at(0, 0) = 1;
  b.at(1, 0) = 2;
  EXPECT_FALSE(solve(a, b));
}
