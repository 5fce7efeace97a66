#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "leibniz/catalog.hpp"
#include "leibniz/scalar.hpp"

using namespace leibniz;

namespace {

using MatrixT = Matrix<RationalFunction>;

RationalFunction rf(std::string_view s) { return parse_rational_function(s); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  long integer(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rational() { return Rational(mpz_class(integer(-4, 4)), mpz_class(integer(1, 3))); }

  MatrixQ rational_matrix(std::size_t r, std::size_t c, int zero_bias) {
    MatrixQ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (integer(0, zero_bias) == 0) m(i, j) = rational();
    return m;
  }

  RationalFunction entry() {
    const RationalFunction a = RationalFunction(rational()) * RationalFunction::power_of_t(static_cast<int>(integer(-2, 2)));
    return integer(0, 1) ? a : a + RationalFunction(rational());
  }

 private:
  std::mt19937_64 eng_;
};

/// Determinant by permutation expansion, independent of elimination.
template <Field F>
F leibniz_formula_det(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  F det(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    F term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, p[i]);
    det = det + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

}  // namespace

TEST(Rank, Basics) {
  EXPECT_EQ(rank(MatrixQ::identity(3)), 3u);
  EXPECT_EQ(rank(MatrixQ(2, 5)), 0u);
  const MatrixQ m(2, 3, {1, 2, 3, 2, 4, 6});
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rank, DerivationSystemOfLambda6HasNullityThree) {
  // The system is n^3 x n^2 = 27 x 9; three free parameters survive.
  const MatrixQ sys = derivation_system(build("lambda6"));
  EXPECT_EQ(sys.rows(), 27u);
  EXPECT_EQ(sys.cols(), 9u);
  EXPECT_EQ(sys.cols() - rank(sys), 3u);
  EXPECT_EQ(nullspace(sys).size(), 3u);
}

TEST(Nullspace, Basics) {
  EXPECT_TRUE(nullspace(MatrixQ::identity(4)).empty());
  const auto ns = nullspace(MatrixQ(1, 2, {1, -1}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (Vector<Rational>{1, 1}));
}

TEST(Nullspace, DerivationsOfN2PlusA1) {
  const AlgebraQ a = direct_sum(build("n2"), build("abelian", {1, {}, {}}));
  const MatrixQ sys = derivation_system(a);
  EXPECT_EQ(sys.rows(), 27u);
  EXPECT_EQ(nullspace(sys).size(), 5u);
}

TEST(Invert, DiagonalFamily) {
  const std::vector<RationalFunction> d{rf("1/t"), rf("1/t"), rf("1/t^2")};
  const std::vector<RationalFunction> want{rf("t"), rf("t"), rf("t^2")};
  EXPECT_EQ(invert(MatrixT::diagonal(d)), MatrixT::diagonal(want));
  EXPECT_EQ(invert(MatrixT::identity(3)), MatrixT::identity(3));
}

TEST(Invert, R2ToN2Family) {
  const MatrixT g = MatrixT::from_columns({{rf("1/t"), rf("-1/t^2")}, {0, rf("1/t^2")}});
  const MatrixT inv = invert(g);
  EXPECT_EQ(inv.column(0), (Vector<RationalFunction>{rf("t"), rf("t")}));
  EXPECT_EQ(inv.column(1), (Vector<RationalFunction>{0, rf("t^2")}));
  EXPECT_EQ(g * inv, MatrixT::identity(2));
}

TEST(Invert, SingularThrows) {
  EXPECT_THROW(invert(MatrixQ(2, 2, {1, 2, 2, 4})), SingularMatrix);
  EXPECT_THROW(invert(MatrixT(2, 2, {rf("t"), rf("t^2"), 1, rf("t")})), SingularMatrix);
  EXPECT_THROW(invert(MatrixQ(2, 3)), DimensionMismatch);
}

TEST(Solve, ExactSolution) {
  const MatrixQ m(2, 2, {2, 1, 1, 3});
  const Vector<Rational> b{1, 2};
  const auto x = solve(m, std::span<const Rational>(b));
  EXPECT_EQ(m.apply(x), b);
  EXPECT_EQ(x, (Vector<Rational>{Rational(mpz_class(1), mpz_class(5)), Rational(mpz_class(3), mpz_class(5))}));
}

// Properties -----------------------------------------------------------------

TEST(LinalgProperties, RankPlusNullityIsColumnCount) {
  Gen g(1);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 6)), c = static_cast<std::size_t>(g.integer(1, 6));
    const MatrixQ m = g.rational_matrix(r, c, static_cast<int>(g.integer(0, 3)));
    const auto ns = nullspace(m);
    const std::size_t bareiss = rank(m);
    EXPECT_EQ(bareiss, reduced_row_echelon(m).pivots.size());
    EXPECT_EQ(bareiss + ns.size(), c);
    for (const auto& v : ns) EXPECT_TRUE(is_zero_vector(m.apply(v)));
  }
}

TEST(LinalgProperties, NullspaceIsDeterministic) {
  Gen g(2);
  for (int i = 0; i < 50; ++i) {
    const MatrixQ m = g.rational_matrix(3, 6, 2);
    EXPECT_EQ(nullspace(m), nullspace(MatrixQ(m)));
  }
}

TEST(LinalgProperties, DeterminantMatchesPermutationExpansion) {
  Gen g(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const MatrixQ m = g.rational_matrix(n, n, 1);
    const Rational det = determinant(m);
    EXPECT_EQ(det, leibniz_formula_det(m));
    EXPECT_EQ(det.is_zero(), rank(m) < n);
  }
}

TEST(LinalgProperties, DoubleInverseOverQt) {
  Gen g(4);
  int inverted = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 3));
    MatrixT m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (g.integer(0, 1)) m(r, c) = g.entry();
    if (leibniz_formula_det(m).is_zero()) {
      EXPECT_THROW(invert(m), SingularMatrix);
      continue;
    }
    const MatrixT inv = invert(m);
    EXPECT_EQ(m * inv, MatrixT::identity(n));
    EXPECT_EQ(invert(inv), m);
    ++inverted;
  }
  EXPECT_GT(inverted, 10);
}
