#include <sstream>

#include "nbspec/matrix.hpp"
#include "test_util.hpp"

using namespace nbspec;

TEST(Matrix, IdentityAndDiagonal) {
  const auto i3 = DenseRealMatrix::identity(3);
  EXPECT_EQ(trace(i3), 3.0);
  EXPECT_TRUE(is_diagonal(i3));
  const std::vector<double> d{1.0, -2.0, 5.0};
  const auto m = DenseRealMatrix::diagonal(d);
  EXPECT_EQ(m(1, 1), -2.0);
  EXPECT_EQ(m(0, 2), 0.0);
}

TEST(Matrix, ArithmeticAndProducts) {
  DenseRealMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  const auto p = multiply(a, DenseRealMatrix::identity(2));
  EXPECT_EQ(p, a);
  const auto sq = multiply(a, a);
  EXPECT_EQ(sq(0, 0), 7.0);
  EXPECT_EQ(sq(1, 1), 22.0);
  EXPECT_EQ((a - a), DenseRealMatrix(2, 2));
  EXPECT_EQ((2.0 * a)(1, 0), 6.0);
  EXPECT_EQ(transpose(a)(0, 1), 3.0);
  const std::vector<double> x{1.0, 1.0};
  EXPECT_EQ(multiply(a, x), (std::vector<double>{3.0, 7.0}));
  EXPECT_DOUBLE_EQ(frobenius_norm(a), std::sqrt(30.0));
  EXPECT_EQ(max_abs(a), 4.0);
}

TEST(Matrix, SymmetryCheckIsRelative) {
  DenseRealMatrix a(2, 2);
  a(0, 1) = 1e6;
  a(1, 0) = 1e6 * (1 + 1e-14);
  EXPECT_TRUE(is_symmetric(a));
  a(1, 0) = 1e6 * (1 + 1e-9);
  EXPECT_FALSE(is_symmetric(a));
}

TEST(Matrix, CompanionAndBlock) {
  DenseRealMatrix a(1, 1, 3.0);
  DenseRealMatrix x(1, 1, -2.0);
  const auto c = companion(a, x);
  ASSERT_EQ(c.rows(), 2u);
  EXPECT_EQ(c(0, 0), 3.0);
  EXPECT_EQ(c(0, 1), -2.0);
  EXPECT_EQ(c(1, 0), 1.0);
  EXPECT_EQ(c(1, 1), 0.0);
  EXPECT_EQ(block(c, 0, 1, 1, 1)(0, 0), -2.0);
}

TEST(Matrix, CsvUsesRoundTripDigits) {
  DenseRealMatrix a(1, 2);
  a(0, 0) = 0.1;
  a(0, 1) = 1.0 / 3.0;
  std::ostringstream out;
  write_csv(out, a);
  double x = 0, y = 0;
  char comma = 0;
  std::istringstream in(out.str());
  in >> x >> comma >> y;
  EXPECT_EQ(x, 0.1);
  EXPECT_EQ(y, 1.0 / 3.0);
}

TEST(Matrix, FiniteCheck) {
  DenseRealMatrix a(2, 2);
  EXPECT_TRUE(all_finite(a));
  a(1, 1) = std::nan("");
  EXPECT_FALSE(all_finite(a));
}
