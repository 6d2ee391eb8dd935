#include <random>

#include <gtest/gtest.h>

#include "commprob/psi.hpp"
#include "support.hpp"

using namespace commprob;
using commprob::testing::read_psi_rows;

namespace {

  std::vector<std::vector<int>> exponent_rows(PsiMatrix const& B) {
    std::vector<std::vector<int>> out(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (std::size_t j = 0; j < B.size(); ++j) {
        auto x = B.exponent(i, j);
        out[i].push_back(x ? static_cast<int>(*x) : -1);
      }
    }
    return out;
  }

  //! Random non-negative matrix with positive diagonal and a nonzero entry
  //! before the diagonal in every row after the first.
  std::vector<std::vector<BigCount>> random_pre_diagonal(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<int> entry(0, 4), pos(1, 4);
    std::vector<std::vector<BigCount>> B(m, std::vector<BigCount>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        B[i][j] = entry(rng);
      }
      B[i][i] = pos(rng);
      if (i > 0) {
        std::uniform_int_distribution<std::size_t> before(0, i - 1);
        B[i][before(rng)] = pos(rng);
      }
    }
    return B;
  }

}  // namespace

TEST(PsiPoly, Arithmetic) {
  auto p = PsiPoly::monomial(2) + PsiPoly::monomial(1, 3);
  auto q = PsiPoly::monomial(1) + PsiPoly::constant(1);
  auto r = p * q;  // (t^2 + 3t)(t + 1) = t^3 + 4t^2 + 3t
  EXPECT_EQ(r.degree(), 3);
  EXPECT_EQ(r.coefficient(2), 4);
  EXPECT_EQ(r.coefficient(1), 3);
  EXPECT_EQ(r.coefficient(0), 0);
  EXPECT_TRUE(PsiPoly().is_zero());
  EXPECT_FALSE(PsiPoly().degree().has_value());
  EXPECT_TRUE(PsiPoly::monomial(5).is_monomial());
  EXPECT_FALSE(r.is_monomial());
}

TEST(Tropical, MatrixPowerMatchesIteration) {
  auto B = fixture("gl4");
  auto T = B.degrees();
  for (unsigned d : {1u, 2u, 5u, 17u}) {
    auto                P = T.power(d);
    std::vector<Degree> v(B.size());
    v[0] = 0;
    for (unsigned k = 0; k < d; ++k) {
      v = T.apply(v);
    }
    for (std::size_t i = 0; i < B.size(); ++i) {
      EXPECT_EQ(P(i, 0), v[i]) << d;
    }
  }
}

TEST(Fixtures, MatchReferenceMatrices) {
  for (auto const& name : {"gl2", "gl3", "gl4"}) {
    EXPECT_EQ(exponent_rows(fixture(name)), read_psi_rows(name)) << name;
  }
  EXPECT_EQ(fixture("gl4").size(), 19u);
}

TEST(Fixtures, Metadata) {
  EXPECT_EQ(fixture("gl2").alpha(), 2);
  EXPECT_EQ(fixture("gl3").alpha(), 3);
  EXPECT_EQ(fixture("gl4").alpha(), 5);
  EXPECT_EQ(fixture("gl4").dimension, 16u);
  EXPECT_EQ(fixture("gl3").rank, 3u);
  try {
    fixture("gl5");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::unknown_fixture);
  }
}

TEST(Fixtures, StructuralChecksPass) {
  for (auto const& name : {"gl2", "gl3", "gl4"}) {
    auto checks = verify_symbolic_structure(fixture(name));
    EXPECT_EQ(checks.size(), 6u);
    for (auto const& c : checks) {
      EXPECT_TRUE(c.passed) << name << " " << c.name << " " << c.detail;
    }
  }
}

TEST(Fixtures, StructuralCheckCatchesBrokenMatrix) {
  auto rows = read_psi_rows("gl2");
  rows[0][2] = 1;
  PsiMatrix B("broken", detail::exponent_grid(rows));
  B.dimension        = 4;
  B.center_dimension = 1;
  B.abelian_columns  = {1, 2};
  bool first_row_ok  = true;
  for (auto const& c : verify_symbolic_structure(B)) {
    if (c.name == "first_row_zero") {
      first_row_ok = c.passed;
      EXPECT_NE(c.detail.find("(1,3)"), std::string::npos);
    }
  }
  EXPECT_FALSE(first_row_ok);
}

TEST(Degrees, GL2IsTwoD) {
  auto seq = first_column_degree_sequence(fixture("gl2"), 50);
  for (unsigned d = 1; d <= 50; ++d) {
    EXPECT_EQ(seq[d - 1].degree, 2 * d);
    EXPECT_TRUE(seq[d - 1].exact_checked);
  }
}

TEST(Degrees, SequenceAgreesWithDirectPower) {
  auto B   = fixture("gl3");
  auto seq = first_column_degree_sequence(B, 70);
  for (unsigned d : {1u, 7u, 64u, 65u, 70u}) {
    auto c = first_column_degree_checked(B, d);
    EXPECT_EQ(c.degree, seq[d - 1].degree);
    EXPECT_EQ(c.exact_checked, d <= exact_power_limit);
  }
}

TEST(Degrees, WindowHoldsUpToOneThousand) {
  for (auto const& name : {"gl2", "gl3", "gl4"}) {
    auto B   = fixture(name);
    auto seq = first_column_degree_sequence(B, 1000);
    for (unsigned d = 1; d <= 1000; ++d) {
      EXPECT_NO_THROW(degree_window_for_degree(B, d, seq[d - 1].degree)) << name << " " << d;
    }
  }
}

TEST(Degrees, WindowViolationIsReported) {
  auto B = fixture("gl2");
  try {
    degree_window_for_degree(B, 10, 21);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::window_violated);
  }
}

TEST(Degrees, BoundsAtDTwoBracketCp2) {
  struct Case {
    char const* name;
    BigRational cp2;
  };
  for (auto const& c : {Case{"gl2", BigRational(3, 4)}, Case{"gl3", BigRational(2, 3)},
                        Case{"gl4", BigRational(5, 8)}}) {
    auto b = cp_bounds(fixture(c.name), 2);
    EXPECT_LE(b.lower, c.cp2) << c.name;
    EXPECT_GE(b.upper, c.cp2) << c.name;
  }
}

TEST(Degrees, DiagonalIntervalOnRandomMatrices) {
  std::mt19937 rng(2024);
  for (std::size_t m : {4u, 6u}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto                               B = random_pre_diagonal(rng, m);
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      auto                               l = pick(rng);
      for (unsigned r = 2; r <= 10; ++r) {
        auto I = diagonal_degree_interval(B, l, r);
        EXPECT_TRUE(I.holds()) << "m=" << m << " l=" << l << " r=" << r << " deg=" << I.degree;
      }
    }
  }
}

TEST(Degrees, DiagonalIntervalPreconditions) {
  std::vector<std::vector<BigCount>> no_pre{{1, 0}, {0, 1}};
  EXPECT_THROW(diagonal_degree_interval(no_pre, 1, 3), Error);
  std::vector<std::vector<BigCount>> ok{{1, 0}, {1, 1}};
  EXPECT_THROW(diagonal_degree_interval(ok, 1, 1), Error);
  EXPECT_THROW(diagonal_degree_interval(ok, 2, 3), Error);
}

TEST(Grid, RoundTrip) {
  for (auto const& name : {"gl2", "gl3", "gl4"}) {
    auto B = fixture(name);
    auto C = import_grid(export_grid(B));
    EXPECT_EQ(B, C) << name;
    EXPECT_EQ(export_grid(C), export_grid(B));
  }
}

TEST(Grid, ImportErrors) {
  try {
    import_grid("dimension=4\n1,-1\n1\n");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::validation_error);
  }
  try {
    import_grid("1,x\n1,1\n");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
  }
  auto B = import_grid("dimension=4\n1,\n1,2\n");
  EXPECT_FALSE(B.exponent(0, 1).has_value());
}
