#include <gtest/gtest.h>

#include <random>

#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

Vector<Rational> e(std::size_t n, std::size_t i) { return unit_vector<Rational>(n, i - 1); }

/// Brute-force defect from raw structure constants, without bracket().
bool brute_force_leibniz(const AlgebraQ& a) {
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t out = 0; out < n; ++out) {
          Rational d(0);
          for (std::size_t m = 0; m < n; ++m) {
            d += a.coefficient(y, z, m) * a.coefficient(x, m, out);  // [x,[y,z]]
            d -= a.coefficient(x, y, m) * a.coefficient(m, z, out);  // [[x,y],z]
            d += a.coefficient(x, z, m) * a.coefficient(m, y, out);  // [[x,z],y]
          }
          if (!d.is_zero()) return false;
        }
  return true;
}

/// Rank of all pairwise products of the whole algebra, by stacking rows.
std::size_t brute_force_square_dim(const AlgebraQ& a) {
  const std::size_t n = a.dim();
  MatrixQ m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i * n + j, k) = a.coefficient(i, j, k);
  return reduced_row_echelon(m).pivots.size();
}

MatrixQ random_invertible(std::mt19937_64& eng, std::size_t n) {
  for (;;) {
    MatrixQ g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const long v = static_cast<long>(eng() % 7) - 3;
        g(r, c) = (eng() % 3 == 0) ? q(v, 2) : q(v);
      }
    if (!determinant(g).is_zero()) return g;
  }
}

}  // namespace

TEST(Bracket, Examples) {
  const AlgebraQ nf3 = build("NF", {3, {}, {}});
  EXPECT_EQ(bracket(nf3, e(3, 2), e(3, 1)), e(3, 3));
  EXPECT_TRUE(is_zero_vector(bracket(nf3, Vector<Rational>(3), e(3, 1))));
  const AlgebraQ l4 = build("lambda4", {{}, q(-2), {}});
  const Vector<Rational> want{0, 0, -2};
  EXPECT_EQ(bracket(l4, e(3, 2), e(3, 2)), want);
}

TEST(Bracket, DimensionMismatchThrows) {
  const AlgebraQ nf3 = build("NF", {3, {}, {}});
  EXPECT_THROW(bracket(nf3, e(2, 1), e(3, 1)), DimensionMismatch);
}

TEST(LeibnizDefect, Examples) {
  EXPECT_TRUE(leibniz_defect(build("NF", {4, {}, {}})).empty());
  EXPECT_TRUE(is_leibniz(AlgebraQ(3)));
  AlgebraQ broken = build("NF", {3, {}, {}});
  broken.set_coefficient(0, 1, 0, 1);  // [e1,e2] = e1
  EXPECT_FALSE(is_leibniz(broken));
  EXPECT_FALSE(brute_force_leibniz(broken));
  EXPECT_FALSE(leibniz_defect(broken).empty());
}

TEST(LeibnizDefect, AgreesWithBruteForceOnCatalog) {
  for (const auto& [key, p] : catalog_instances()) {
    const AlgebraQ a = build(key, p);
    EXPECT_EQ(is_leibniz(a), brute_force_leibniz(a)) << reference(key, p);
    EXPECT_EQ(is_leibniz(a), catalog_entry(key).leibniz) << reference(key, p);
  }
}

TEST(IsLie, Examples) {
  EXPECT_TRUE(is_lie(build("n3")));
  EXPECT_FALSE(is_lie(build("n2")));
  EXPECT_FALSE(is_lie(build("lambda5")));
  EXPECT_TRUE(is_commutative(build("lambda5")));
  EXPECT_FALSE(is_commutative(build("n3")));
}

TEST(ProductSubspace, Examples) {
  const AlgebraQ nf4 = build("NF", {4, {}, {}});
  const auto whole4 = SubspaceQ::whole(4);
  EXPECT_EQ(product_subspace(nf4, whole4, whole4), SubspaceQ::coordinate(4, {1, 2, 3}));
  const AlgebraQ zero(3);
  EXPECT_EQ(product_subspace(zero, SubspaceQ::whole(3), SubspaceQ::whole(3)).dim(), 0u);
  const AlgebraQ p3 = build("pnplus", {3, {}, {}});
  EXPECT_EQ(product_subspace(p3, SubspaceQ::whole(3), SubspaceQ::whole(3)), SubspaceQ::coordinate(3, {1, 2}));
}

TEST(ProductSubspace, MatchesBruteForceOnCatalog) {
  for (const auto& [key, p] : catalog_instances()) {
    const AlgebraQ a = build(key, p);
    const auto w = SubspaceQ::whole(a.dim());
    EXPECT_EQ(product_subspace(a, w, w).dim(), brute_force_square_dim(a)) << reference(key, p);
  }
}

TEST(Series, Examples) {
  EXPECT_EQ(lower_central_series(build("NF", {4, {}, {}})), (std::vector<std::size_t>{4, 3, 2, 1, 0}));
  EXPECT_EQ(lower_central_series(AlgebraQ(3)), (std::vector<std::size_t>{3, 0}));
  const AlgebraQ rnf3 = build("RNF", {3, {}, {}});
  EXPECT_FALSE(is_nilpotent(rnf3));
  EXPECT_NE(lower_central_series(rnf3).back(), 0u);
  EXPECT_TRUE(is_solvable(rnf3));
  EXPECT_EQ(derived_series(rnf3).back(), 0u);
}

TEST(Series, DirectSumAddsDimensions) {
  const AlgebraQ a = build("NF", {3, {}, {}});
  const AlgebraQ b = build("n3");
  const auto la = lower_central_series(a), lb = lower_central_series(b);
  const auto ls = lower_central_series(direct_sum(a, b));
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const std::size_t da = k < la.size() ? la[k] : la.back();
    const std::size_t db = k < lb.size() ? lb[k] : lb.back();
    EXPECT_EQ(ls[k], da + db);
  }
}

TEST(Annihilators, Examples) {
  const AlgebraQ n2a1 = direct_sum(build("n2"), build("abelian", {1, {}, {}}));
  EXPECT_EQ(right_annihilator(n2a1), SubspaceQ::coordinate(3, {1, 2}));
  EXPECT_EQ(right_annihilator(AlgebraQ(4)).dim(), 4u);
  EXPECT_EQ(left_annihilator(AlgebraQ(4)).dim(), 4u);
  EXPECT_EQ(right_annihilator(build("n3plus")), SubspaceQ::coordinate(3, {2}));
  // Left and right differ for a non-symmetric product.
  const AlgebraQ l6 = build("lambda6");
  EXPECT_EQ(right_annihilator(l6), SubspaceQ::coordinate(3, {1, 2}));
  EXPECT_EQ(left_annihilator(l6), SubspaceQ::coordinate(3, {2}));
  EXPECT_EQ(center(l6), SubspaceQ::coordinate(3, {2}));
}

TEST(BasisChange, Lambda4FirstStepAtMinusTwo) {
  const AlgebraQ l4 = build("lambda4", {{}, q(-2), {}});
  const AlgebraQ f = in_basis(l4, lambda4_first_change(q(-2)));
  AlgebraQ want(3);
  want.set_coefficient(0, 0, 2, 1);
  want.set_coefficient(1, 0, 2, -2);
  want.set_coefficient(0, 1, 2, -1);
  EXPECT_EQ(f, want);
}

TEST(BasisChange, Lambda4BetaFormAtMinusTwo) {
  const AlgebraQ f = in_basis(build("lambda4", {{}, q(-2), {}}), lambda4_beta_form_change(q(-2)));
  AlgebraQ want(3);
  want.set_coefficient(1, 0, 2, 1);
  want.set_coefficient(0, 1, 2, q(1, 2));
  EXPECT_EQ(f, want);
}

TEST(BasisChange, IdentityAndSingular) {
  const AlgebraQ a = build("r4");
  EXPECT_EQ(basis_change(a, MatrixQ::identity(4)), a);
  EXPECT_THROW(basis_change(a, MatrixQ(4, 4)), SingularMatrix);
}

TEST(DirectSum, Examples) {
  const AlgebraQ s = direct_sum(build("n2"), build("abelian", {1, {}, {}}));
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_EQ(s.table().size(), 1u);
  EXPECT_EQ(s.product(0, 0), e(3, 2));
  EXPECT_EQ(direct_sum(AlgebraQ(1), AlgebraQ(1)), AlgebraQ(2));
  const AlgebraQ big = direct_sum(build("n3plus"), build("abelian", {2, {}, {}}));
  EXPECT_EQ(big, build("n3plus", {5, {}, {}}));
}

TEST(Nilradical, Examples) {
  EXPECT_EQ(verify_nilradical(build("RNF", {3, {}, {}}), SubspaceQ::coordinate(4, {0, 1, 2})),
            NilradicalVerdict::exact);
  EXPECT_EQ(verify_nilradical(build("n4"), SubspaceQ::whole(4)), NilradicalVerdict::exact);
  EXPECT_EQ(verify_nilradical(build("R3_4"), SubspaceQ::coordinate(4, {0, 1, 2})), NilradicalVerdict::exact);
  EXPECT_EQ(verify_nilradical(build("R3_4"), SubspaceQ::coordinate(4, {1, 2})), NilradicalVerdict::rejected);
  // r5: the derived algebra has codimension 2; the search extends it by e4.
  const auto nil = find_nilradical(build("r5"));
  ASSERT_TRUE(nil.has_value());
  EXPECT_EQ(nil->dim(), 4u);
}

TEST(IdealChecks, Examples) {
  const AlgebraQ rnf = build("RNF", {3, {}, {}});
  EXPECT_TRUE(is_ideal(rnf, SubspaceQ::coordinate(4, {1, 2})));
  EXPECT_FALSE(is_ideal(rnf, SubspaceQ::coordinate(4, {3})));
  EXPECT_TRUE(is_subalgebra(rnf, SubspaceQ::coordinate(4, {3})));
}

// Properties -----------------------------------------------------------------

TEST(AlgebraProperties, RandomBasisChangesPreserveInvariants) {
  std::mt19937_64 eng(424242);
  const std::vector<std::pair<std::string, CatalogParams>> pool{
      {"n3", {}}, {"lambda4", {{}, q(-2), {}}}, {"lambda6", {}}, {"r31", {}},
      {"NF", {4, {}, {}}}, {"r4", {}}, {"RNF", {3, {}, {}}}, {"R3_4", {}}, {"n3plus", {4, {}, {}}}};
  for (int i = 0; i < 90; ++i) {
    const auto& [key, p] = pool[static_cast<std::size_t>(i) % pool.size()];
    const AlgebraQ a = build(key, p);
    const MatrixQ g = random_invertible(eng, a.dim());
    const AlgebraQ b = basis_change(a, g);
    EXPECT_EQ(basis_change(b, invert(g)), a);
    EXPECT_TRUE(is_leibniz(b));
    EXPECT_EQ(lower_central_series(b), lower_central_series(a));
    EXPECT_EQ(derived_series(b), derived_series(a));
    EXPECT_EQ(right_annihilator(b).dim(), right_annihilator(a).dim());
    EXPECT_EQ(left_annihilator(b).dim(), left_annihilator(a).dim());
  }
}
