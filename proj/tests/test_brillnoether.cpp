#include <gtest/gtest.h>

#include "cohstab/brillnoether.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cohstab;

namespace {

const Parabola kParabola{Rational(1), Rational(3), Rational(19, 10)};

AffinePiece piece(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed,
                  Rational slope, Rational intercept) {
  return {Interval{std::move(lo), lo_closed, std::move(hi), hi_closed}, std::move(slope), std::move(intercept)};
}

std::vector<Rational> grid(Rational lo, const Rational& hi, const Rational& step) {
  std::vector<Rational> xs;
  for (; lo <= hi; lo += step) xs.push_back(lo);
  return xs;
}

}  // namespace

TEST(GeneralBound, Examples) {
  const PiecewiseBound b = general_bound(Genus(4));
  EXPECT_EQ(b.evaluate(Rational(-1)), Rational(0));
  EXPECT_EQ(b.evaluate(Rational(7)), Rational(4));
  EXPECT_EQ(b.evaluate(Rational(6)), Rational(4));
  EXPECT_EQ(b.evaluate(Rational(3)), Rational(5, 2));
  EXPECT_EQ(b.evaluate(Rational(0)), Rational(1));
}

TEST(GeneralBound, MatchesCliffordFormula) {
  for (int g = 1; g <= 6; ++g) {
    const PiecewiseBound b = general_bound(Genus(g));
    for (const Rational& x : grid(Rational(-3), Rational(2 * g + 3), Rational(1, 8))) {
      ASSERT_EQ(b.evaluate(x), oracle::clifford(x, g)) << "g=" << g << " x=" << x;
    }
  }
}

TEST(Genus4Bound, TableValues) {
  const PiecewiseBound b = genus4_bound();
  EXPECT_EQ(b.evaluate(Rational(0)), Rational(1));
  EXPECT_EQ(b.evaluate(Rational(1)), Rational(1));
  EXPECT_EQ(b.evaluate(Rational(2)), Rational(4, 3));
  EXPECT_EQ(b.evaluate(Rational(9, 4)), Rational(17, 12));
  EXPECT_EQ(b.evaluate(Rational(5, 2)), Rational(3, 2));
  EXPECT_EQ(b.evaluate(Rational(11, 4)), Rational(13, 8));
  EXPECT_EQ(b.evaluate(Rational(3)), Rational(2));
  EXPECT_EQ(b.evaluate(Rational(4)), Rational(7, 3));
  EXPECT_EQ(b.evaluate(Rational(5)), Rational(3));
  EXPECT_EQ(b.evaluate(Rational(6)), Rational(4));
  EXPECT_EQ(b.evaluate(Rational(-100)), Rational(0));
  EXPECT_EQ(b.evaluate(Rational(10)), Rational(7));
}

TEST(Genus4Bound, MatchesTableOracleOnGrid) {
  const PiecewiseBound b = genus4_bound();
  for (const Rational& x : grid(Rational(-2), Rational(9), Rational(1, 96))) {
    ASSERT_EQ(b.evaluate(x), oracle::genus4(x)) << x;
  }
}

TEST(Genus4Bound, MatchesTableOracleRandom) {
  const PiecewiseBound b = genus4_bound();
  gen::Source rnd(21);
  for (std::size_t i = 0; i < gen::kCases; ++i) {
    const Rational x = rnd.rational(200, 37);
    ASSERT_EQ(b.evaluate(x), oracle::genus4(x)) << x;
  }
}

TEST(Genus4Bound, DualityReflection) {
  const PiecewiseBound b = genus4_bound();
  for (const Rational& x : grid(Rational(0), Rational(3), Rational(1, 120))) {
    ASSERT_EQ(b.evaluate(Rational(6) - x) - b.evaluate(x), Rational(3) - x) << x;
  }
}

TEST(Genus4Bound, FloorsAndCliffordComparison) {
  const PiecewiseBound b = genus4_bound();
  const PiecewiseBound c = general_bound(Genus(4));
  for (const Rational& x : grid(Rational(-3), Rational(9), Rational(1, 48))) {
    const Rational v = b.evaluate(x);
    ASSERT_GE(v, 0) << x;
    ASSERT_GE(v, x - 3) << x;
    ASSERT_LE(v, c.evaluate(x)) << x;
    if (x <= 0 || x > 6) ASSERT_EQ(v, c.evaluate(x)) << x;
  }
}

TEST(Genus4Bound, UpperSemicontinuousAtBreakpoints) {
  const PiecewiseBound b = genus4_bound();
  const std::vector<Rational> expected{Rational(0), Rational(2), Rational(5, 2), Rational(3),
                                       Rational(7, 2), Rational(4), Rational(6)};
  EXPECT_EQ(b.breakpoints(), expected);
  for (const Rational& x : b.breakpoints()) {
    EXPECT_GE(b.evaluate(x), b.left_limit(x)) << x;
    EXPECT_GE(b.evaluate(x), b.right_limit(x)) << x;
  }
  EXPECT_EQ(b.left_limit(Rational(3)), Rational(7, 4));
  EXPECT_EQ(b.right_limit(Rational(6)), Rational(3));
  EXPECT_EQ(b.left_limit(Rational(6)), Rational(15, 4));
}

TEST(Genus4Bound, ReflectedPieces) {
  const AffinePiece p = reflect_by_duality(piece(Rational(0), false, Rational(2), false, Rational(1, 4), Rational(3, 4)),
                                           Genus(4));
  EXPECT_EQ(p.slope, Rational(3, 4));
  EXPECT_EQ(p.intercept, Rational(-3, 4));
  EXPECT_EQ(p.domain.str(), "(4, 6)");
  const AffinePiece q = reflect_by_duality(
      piece(Rational(2), true, Rational(5, 2), false, Rational(1, 3), Rational(2, 3)), Genus(4));
  EXPECT_EQ(q.domain.str(), "(7/2, 4]");
  EXPECT_EQ(q.at(Rational(4)), Rational(7, 3));
}

TEST(PiecewiseBoundCtor, RejectsGap) {
  std::vector<AffinePiece> ps{piece(std::nullopt, false, Rational(0), false, Rational(0), Rational(0)),
                              piece(Rational(1), false, std::nullopt, false, Rational(0), Rational(0))};
  EXPECT_THROW(PiecewiseBound(ps, {}), std::invalid_argument);
}

TEST(PiecewiseBoundCtor, RejectsOverlap) {
  std::vector<AffinePiece> ps{piece(std::nullopt, false, Rational(1), true, Rational(0), Rational(0)),
                              piece(Rational(1), true, std::nullopt, false, Rational(0), Rational(0))};
  EXPECT_THROW(PiecewiseBound(ps, {}), std::invalid_argument);
}

TEST(PiecewiseBoundCtor, RejectsLowerSemicontinuousJump) {
  // value at 0 is 0 but the right limit is 1
  std::vector<AffinePiece> ps{piece(std::nullopt, false, Rational(0), true, Rational(0), Rational(0)),
                              piece(Rational(0), false, std::nullopt, false, Rational(0), Rational(1))};
  EXPECT_THROW(PiecewiseBound(ps, {}), std::invalid_argument);
  // an override that dips below both sides is rejected too
  std::vector<AffinePiece> flat{piece(std::nullopt, false, std::nullopt, false, Rational(0), Rational(1))};
  EXPECT_THROW(PiecewiseBound(flat, {{Rational(0), Rational(0)}}), std::invalid_argument);
  EXPECT_NO_THROW(PiecewiseBound(flat, {{Rational(0), Rational(2)}}));
}

TEST(Dominance, ParabolaNineteenTenths) {
  const PiecewiseBound b = genus4_bound();
  const DominanceResult yes = quadratic_dominates(b, kParabola, {Rational(3)});
  EXPECT_TRUE(yes.dominates);
  EXPECT_FALSE(yes.witness.has_value());
  const DominanceResult no = quadratic_dominates(b, kParabola);
  EXPECT_FALSE(no.dominates);
  ASSERT_TRUE(no.witness.has_value());
  EXPECT_EQ(*no.witness, Rational(3));
}

TEST(Dominance, ZeroShiftFailsInsideInterval) {
  const DominanceResult r = quadratic_dominates(genus4_bound(), {Rational(1), Rational(3), Rational(0)}, {Rational(3)});
  EXPECT_FALSE(r.dominates);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GT(*r.witness, 0);
  EXPECT_LT(*r.witness, 6);
  const Parabola p{Rational(1), Rational(3), Rational(0)};
  EXPECT_LE(p(*r.witness), genus4_bound().evaluate(*r.witness));
}

TEST(Dominance, RejectsNonUpwardParabola) {
  EXPECT_THROW(quadratic_dominates(genus4_bound(), {Rational(0), Rational(3), Rational(5)}), std::invalid_argument);
}

TEST(Dominance, TouchingAtOpenEndpointIsNotAViolation) {
  // (x - 1)^2 + 1 against 1 on (-inf, 1) and 2 - x on [1, inf): the left gap
  // only tends to 0, the right one is 0 at x = 1.
  std::vector<AffinePiece> ps{piece(std::nullopt, false, Rational(1), false, Rational(0), Rational(1)),
                              piece(Rational(1), true, std::nullopt, false, Rational(-1), Rational(2))};
  const PiecewiseBound b(ps, {});
  const Parabola p{Rational(1), Rational(1), Rational(1)};
  EXPECT_FALSE(quadratic_dominates(b, p).dominates);
  EXPECT_TRUE(quadratic_dominates(b, p, {Rational(1)}).dominates);
}

TEST(Dominance, AgreesWithGridSearch) {
  const PiecewiseBound b = genus4_bound();
  const std::vector<Rational> xs = grid(Rational(-2), Rational(8), Rational(1, 64));
  for (const Rational& k : {Rational(19, 10), Rational(2), Rational(3, 2), Rational(1), Rational(0),
                            Rational(21, 10), Rational(7, 4)}) {
    for (const Rational& s : {Rational(1), Rational(1, 2), Rational(2)}) {
      const Parabola p{s, Rational(3), k};
      const DominanceResult r = quadratic_dominates(b, p, {Rational(3)});
      bool grid_violation = false;
      for (const Rational& x : xs) {
        if (x != 3 && p(x) <= b.evaluate(x)) grid_violation = true;
      }
      if (grid_violation) EXPECT_FALSE(r.dominates) << "s=" << s << " k=" << k;
      if (!r.dominates) {
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_NE(*r.witness, 3);
        EXPECT_LE(p(*r.witness), b.evaluate(*r.witness)) << "s=" << s << " k=" << k;
      }
    }
  }
}

TEST(Dominance, CertificateGridCheck) {
  const PiecewiseBound b = genus4_bound();
  for (const Rational& x : grid(Rational(-2), Rational(8), Rational(1, 16))) {
    if (x == 3) continue;
    ASSERT_GT(kParabola(x), b.evaluate(x)) << x;
  }
}

TEST(PlotData, OverlayRowAtThree) {
  const auto rows = emit_plot_data(genus4_bound(), Rational(-1), Rational(7), Rational(1, 2), kParabola);
  bool found = false;
  for (const PlotRow& row : rows) {
    if (row.x == 3) {
      found = true;
      EXPECT_EQ(row.bound, Rational(2));
      ASSERT_TRUE(row.overlay.has_value());
      EXPECT_EQ(*row.overlay, Rational(19, 10));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(rows.size(), 17u);
}

TEST(PlotData, SinglePointAndOverrides) {
  auto rows = emit_plot_data(genus4_bound(), Rational(5), Rational(5), Rational(1));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].bound, Rational(3));
  EXPECT_FALSE(rows[0].overlay.has_value());
  // override points are included even off the sampling lattice
  rows = emit_plot_data(genus4_bound(), Rational(-1, 3), Rational(7), Rational(2, 3));
  std::size_t overrides = 0;
  for (const PlotRow& row : rows) {
    if (row.x == 0 || row.x == 3 || row.x == 6) ++overrides;
  }
  EXPECT_EQ(overrides, 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i - 1].x, rows[i].x);
}

TEST(PlotData, RejectsBadRange) {
  EXPECT_THROW(emit_plot_data(genus4_bound(), Rational(1), Rational(0), Rational(1)), std::invalid_argument);
  EXPECT_THROW(emit_plot_data(genus4_bound(), Rational(0), Rational(1), Rational(0)), std::invalid_argument);
  EXPECT_THROW(emit_plot_data(genus4_bound(), Rational(0), Rational(1), Rational(-1)), std::invalid_argument);
}

TEST(IntervalNotation, Strings) {
  EXPECT_EQ((Interval{std::nullopt, false, Rational(0), false}).str(), "(-inf, 0)");
  EXPECT_EQ((Interval{Rational(2), true, Rational(5, 2), false}).str(), "[2, 5/2)");
  EXPECT_TRUE((Interval{Rational(2), true, Rational(5, 2), false}).contains(Rational(2)));
  EXPECT_FALSE((Interval{Rational(2), true, Rational(5, 2), false}).contains(Rational(5, 2)));
  EXPECT_TRUE((Interval{Rational(2), true, Rational(5, 2), false}).closure_contains(Rational(5, 2)));
}
