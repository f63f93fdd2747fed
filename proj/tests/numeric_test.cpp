#include <gtest/gtest.h>

#include "slr/semilinear.hpp"
#include "support.hpp"

namespace slr {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational x(Integer(6), Integer(-8));
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 4);
  EXPECT_EQ(x.str(), "-3/4");
  EXPECT_EQ(Rational::parse("10/4"), Rational(Integer(5), Integer(2)));
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OperationsStayCanonical) {
  testing::Gen g(11);
  for (int it = 0; it < 500; ++it) {
    const Rational a = g.rational(50), b = g.rational(50);
    for (const Rational& c : {a + b, a - b, a * b}) {
      EXPECT_GT(c.denominator(), 0);
      EXPECT_EQ(gcd(c.numerator(), c.denominator()), 1);
    }
  }
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor(Rational::parse("-7/2")), -4);
  EXPECT_EQ(ceil(Rational::parse("-7/2")), -3);
  EXPECT_EQ(floor(Rational(5)), 5);
  EXPECT_EQ(ceil(Rational::parse("1/3")), 1);
}

TEST(FloorLog, Examples) {
  EXPECT_EQ(floor_log(2, Rational(8)), 3);
  EXPECT_EQ(floor_log(6, Rational::parse("1/7")), -2);
  EXPECT_EQ(floor_log(6, Rational(8)), 1);
  EXPECT_EQ(floor_log(10, Rational(1)), 0);
  EXPECT_THROW(floor_log(2, Rational(0)), PreconditionError);
  EXPECT_THROW(floor_log(1, Rational(5)), PreconditionError);
}

TEST(FloorLog, BracketsProperty) {
  testing::Gen g(3);
  for (int it = 0; it < 2000; ++it) {
    const Integer base = static_cast<long>(g.integer(2, 40));
    Rational x(Integer(static_cast<long>(g.integer(1, 1'000'000))), Integer(static_cast<long>(g.integer(1, 1'000'000))));
    if (g.coin()) x *= Rational(pow(Integer(7), static_cast<unsigned long>(g.integer(0, 60))));
    const long e = floor_log(base, x);
    const auto power = [&](long k) {
      return k >= 0 ? Rational(pow(base, static_cast<unsigned long>(k)))
                    : Rational(Integer(1), pow(base, static_cast<unsigned long>(-k)));
    };
    EXPECT_LE(power(e), x);
    EXPECT_LT(x, power(e + 1));
  }
}

TEST(CeilRoot, Property) {
  for (long x = 0; x < 300; ++x)
    for (unsigned long k = 1; k <= 5; ++k) {
      const Integer c = ceil_root(Integer(x), k);
      EXPECT_GE(pow(c, k), x);
      if (c > 0) {
        EXPECT_LT(pow(c - 1, k), x);
      }
    }
}

TEST(PerturbedValue, PositivityAndOrder) {
  EXPECT_TRUE(PerturbedValue(Rational(0), Rational(1)).is_positive());
  EXPECT_FALSE(PerturbedValue(Rational(-1), Rational(100)).is_positive());
  EXPECT_TRUE(PerturbedValue(Rational(1), Rational(-100)).is_positive());
  EXPECT_LT(PerturbedValue(Rational(1), Rational(2)), PerturbedValue(Rational(1), Rational(3)));
}

TEST(PerturbedValue, TotalOrderRespectsAddition) {
  testing::Gen g(5);
  for (int it = 0; it < 1000; ++it) {
    const PerturbedValue a(g.rational(3), g.rational(3)), b(g.rational(3), g.rational(3)), c(g.rational(3), g.rational(3));
    const int trichotomy = (a < b) + (b < a) + (a == b);
    EXPECT_EQ(trichotomy, 1);
    if (a < b) {
      EXPECT_LT(a + c, b + c);
    }
    if (a < b && b < c) {
      EXPECT_LT(a, c);
    }
    EXPECT_EQ((a - b).is_positive(), b < a);
  }
}

TEST(PerturbMatrix, Examples) {
  const auto p = perturb_matrix(Matrix<Rational>::from_rows({{0, 0}}));
  EXPECT_EQ(p(0, 0), PerturbedValue(Rational(0), Rational::parse("1/2")));
  EXPECT_EQ(p(0, 1), PerturbedValue(Rational(0), Rational(1)));

  // Diagonal sum 0 is a non-edge before and after.
  const auto z = Matrix<Rational>::from_rows({{0, 0}, {0, 0}});
  const Tuple t{1, 2};
  EXPECT_FALSE(primitive_edge(z, t));
  EXPECT_FALSE(primitive_edge(perturb_matrix(z), t));
}

TEST(PerturbMatrix, RowsBecomeDistinct) {
  testing::Gen g(9);
  for (int it = 0; it < 100; ++it) {
    Matrix<Rational> m(3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = Rational(g.integer(-1, 1));
    const auto p = perturb_matrix(m);
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<PerturbedValue> row(p.row(i).begin(), p.row(i).end());
      std::sort(row.begin(), row.end());
      EXPECT_EQ(std::adjacent_find(row.begin(), row.end()), row.end());
    }
  }
}

// Exhaustive over {-1,0,1} matrices with r <= 3, N <= 5 would be 3^15; every
// r x N shape is covered exhaustively up to 3^10 entries and sampled beyond.
TEST(PerturbMatrix, PreservesPrimitiveHypergraph) {
  auto check = [](const Matrix<Rational>& m) {
    const auto before = primitive_hypergraph(m);
    const auto after = primitive_hypergraph(perturb_matrix(m));
    for (const auto& t : testing::all_tuples(static_cast<Vertex>(m.cols()), static_cast<unsigned>(m.rows())))
      ASSERT_EQ(before.contains(t), after.contains(t));
  };
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t n = r; n <= 5; ++n) {
      const std::size_t cells = r * n;
      if (cells <= 10) {
        std::size_t total = 1;
        for (std::size_t c = 0; c < cells; ++c) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
          Matrix<Rational> m(r, n);
          std::size_t x = code;
          for (std::size_t c = 0; c < cells; ++c, x /= 3) m(c / n, c % n) = Rational(static_cast<long>(x % 3) - 1);
          check(m);
        }
      } else {
        testing::Gen g(r * 100 + n);
        for (int it = 0; it < 3000; ++it) {
          Matrix<Rational> m(r, n);
          for (std::size_t c = 0; c < cells; ++c) m(c / n, c % n) = Rational(g.integer(-1, 1));
          check(m);
        }
      }
    }
}

}  // namespace
}  // namespace slr
