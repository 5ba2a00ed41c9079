#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "sampling.hpp"
#include "tiltstab/destab.hpp"
#include "tiltstab/errors.hpp"
#include "tiltstab/walls.hpp"

using namespace tiltstab;

namespace {
const Rational kHalf(1, 2);

std::vector<DestabilizerCandidate> thaddeus_at(std::int64_t hn, const Rational& tau) {
  const Geometry g = Geometry::make(hn);
  return enumerate_destabilizers(standard_class(StandardClass::thaddeus(), g), TiltPoint::make(kHalf, tau), g);
}

using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
std::set<Key> keys(const std::vector<DestabilizerCandidate>& cands) {
  std::set<Key> out;
  for (const auto& c : cands) out.emplace(c.cls.r, c.k, c.c2);
  return out;
}
}  // namespace

TEST(BogomolovCap, Examples) {
  const Geometry g = Geometry::make(72);
  EXPECT_EQ(bogomolov_cap(1, Rational(72), g), Rational(36));
  EXPECT_EQ(bogomolov_cap(3, Rational(144), g), Rational(48));
  EXPECT_EQ(bogomolov_cap(2, Rational(0), g), Rational(0));
  EXPECT_THROW(bogomolov_cap(1, Rational(1), Geometry::make(5, 2, false)), RequiresPicardRankOne);
  EXPECT_THROW(bogomolov_cap(0, Rational(1), g), PreconditionViolated);
}

TEST(RankBound, Examples) {
  const Geometry g = Geometry::make(72);
  const NumericalClass t = standard_class(StandardClass::thaddeus(), g);
  EXPECT_EQ(rank_bound_at(t, TiltPoint::make(kHalf, Rational(1, 9)), g), 1);
  EXPECT_EQ(rank_bound_at(t, TiltPoint::make(kHalf, Rational(1, 36)), g), 3);
  EXPECT_EQ(rank_bound_at(t, TiltPoint::make(kHalf, Rational(1, 4)), g), 1);
  EXPECT_EQ(rank_bound_at(t, TiltPoint::make(kHalf, Rational(1, 3)), g), 0);
  EXPECT_THROW(rank_bound_at(t, TiltPoint::make(Rational(1, 3), Rational(1, 9)), g), UnsupportedTarget);
  EXPECT_THROW(rank_bound_at(standard_class(StandardClass::o_shift(), g), TiltPoint::make(kHalf, Rational(1, 9)), g),
               UnsupportedTarget);
}

TEST(Enumerate, ThaddeusAtOneNinth) {
  const auto cands = thaddeus_at(72, Rational(1, 9));
  ASSERT_EQ(cands.size(), 6u);
  for (std::int64_t d = 0; d <= 5; ++d) {
    const auto& c = cands[d];
    EXPECT_EQ(c.cls, (NumericalClass{1, Rational(72), Rational(36 - d)}));
    EXPECT_EQ(c.relation, d == 5 ? Relation::OnWall : Relation::StrictlyAbove);
    EXPECT_EQ(c.phase, PhaseFlag::Finite);
    EXPECT_EQ(c.side, CandidateSide::SubSheaf);
  }
}

TEST(Enumerate, RankThreeAtOneSixth) {
  const auto cands = thaddeus_at(72, Rational(1, 36));
  bool found = false;
  for (const auto& c : cands) {
    if (c.cls == NumericalClass{3, Rational(144), Rational(48)}) {
      found = true;
      EXPECT_EQ(c.relation, Relation::OnWall);
      EXPECT_EQ(c.k, 2);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Enumerate, OnWallCandidatesLieOnTheirWall) {
  const Geometry g = Geometry::make(72);
  const NumericalClass t = standard_class(StandardClass::thaddeus(), g);
  for (const Rational& tau : {Rational(1, 9), Rational(1, 36), Rational(1, 50)}) {
    for (const auto& c : thaddeus_at(72, tau)) {
      const Wall w = wall(c.cls, t, g);
      ASSERT_EQ(w.kind, Wall::Kind::Circle);
      const Rational height = w.radius_sq - square(kHalf - w.center);
      EXPECT_EQ(c.relation == Relation::OnWall, height == tau);
      EXPECT_EQ(c.relation == Relation::StrictlyAbove, height > tau);
    }
  }
}

TEST(Enumerate, MonotoneInTau) {
  for (std::int64_t hn : {6, 18, 72}) {
    std::set<Key> previous;
    for (std::int64_t n = 2; n <= 80; ++n) {
      const auto now = keys(thaddeus_at(hn, Rational(1, n)));
      for (const auto& k : previous) EXPECT_TRUE(now.count(k)) << "hn=" << hn << " tau=1/" << n;
      previous = now;
    }
  }
}

TEST(Enumerate, SortedAndQuotientAdmissible) {
  const Geometry g = Geometry::make(72);
  const NumericalClass t = standard_class(StandardClass::thaddeus(), g);
  const TiltPoint p = TiltPoint::make(kHalf, Rational(1, 100));
  const auto cands = enumerate_destabilizers(t, p, g);
  ASSERT_FALSE(cands.empty());
  for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
    EXPECT_LT(std::make_tuple(cands[i].cls.r, cands[i].k, cands[i].c2),
              std::make_tuple(cands[i + 1].cls.r, cands[i + 1].k, cands[i + 1].c2));
  }
  for (const auto& c : cands) {
    const Rational rw = rank_s(c.cls, p.s, g);
    EXPECT_GE(rw, Rational(0));
    EXPECT_LE(rw, rank_s(t, p.s, g));
    const NumericalClass q = t - c.cls;
    EXPECT_GE(rank_s(q, p.s, g), Rational(0));
    if (rank_s(q, p.s, g).is_zero()) EXPECT_GT(deg_st(q, p, g), Rational(0));
    EXPECT_LE(4 * c.cls.r * c.cls.r * p.tau, Rational(1));
  }
}

TEST(Enumerate, StandardTargetsAreNeverFinitelyDestabilized) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const Geometry g = Geometry::make(sampling::uniform(rng, 1, 60));
    const TiltPoint p = TiltPoint::make(sampling::open_unit(rng), sampling::open_unit(rng));
    for (const auto& tag : {StandardClass::o_shift(), StandardClass::line_bundle(1)}) {
      for (const auto& c : enumerate_destabilizers(standard_class(tag, g), p, g)) {
        EXPECT_NE(c.phase, PhaseFlag::Finite) << tag.str() << " at " << p.str();
      }
    }
    const std::int64_t d = sampling::uniform(rng, 0, 8);
    const TiltPoint half = TiltPoint::make(kHalf, p.tau);
    for (const auto& tag : {StandardClass::l_ideal(d), StandardClass::ideal_dual_shift(d)}) {
      for (const auto& c : enumerate_destabilizers(standard_class(tag, g), half, g)) {
        EXPECT_EQ(c.phase, PhaseFlag::MaximalPhase) << tag.str() << " at " << half.str();
      }
    }
  }
}

TEST(Enumerate, MaximalPhaseCandidatesAreFlagged) {
  // Torsion subobjects of I_W^v[1] supported in points have r_s = 0.
  const Geometry g = Geometry::make(10);
  EnumerationOptions opts;
  opts.include_torsion = true;
  const auto cands = enumerate_destabilizers(standard_class(StandardClass::ideal_dual_shift(2), g),
                                             TiltPoint::make(kHalf, Rational(1, 9)), g, opts);
  for (const auto& c : cands) {
    EXPECT_EQ(c.phase == PhaseFlag::MaximalPhase, rank_s(c.cls, kHalf, g).is_zero());
  }
}

TEST(Enumerate, Errors) {
  const Geometry g = Geometry::make(72);
  const NumericalClass t = standard_class(StandardClass::thaddeus(), g);
  const TiltPoint p = TiltPoint::make(kHalf, Rational(1, 9));
  EXPECT_THROW(enumerate_destabilizers(t, p, Geometry::make(72, 2, false)), RequiresPicardRankOne);
  EXPECT_THROW(enumerate_destabilizers(t, TiltPoint::make(Rational(0), Rational(1, 9)), g), PreconditionViolated);
  EXPECT_THROW(enumerate_destabilizers(t, TiltPoint::make(Rational(1), Rational(1, 9)), g), PreconditionViolated);
  EXPECT_THROW(enumerate_destabilizers(NumericalClass{1, Rational(0), Rational(0)}, p, g), PreconditionViolated);
  EnumerationOptions shifted;
  shifted.include_shifted = true;
  EXPECT_THROW(enumerate_destabilizers(t, p, g, shifted), InfiniteFamily);
  shifted.rank_max = 2;
  shifted.include_torsion = true;
  EXPECT_THROW(enumerate_destabilizers(t, p, g, shifted), InfiniteFamily);
}

TEST(Enumerate, RankMaxCapsSheafRanks) {
  EnumerationOptions opts;
  opts.rank_max = 1;
  const Geometry g = Geometry::make(72);
  const auto cands = enumerate_destabilizers(standard_class(StandardClass::thaddeus(), g),
                                             TiltPoint::make(kHalf, Rational(1, 36)), g, opts);
  for (const auto& c : cands) EXPECT_EQ(c.cls.r, 1);
  EXPECT_EQ(cands.size(), 9u);
}

TEST(ShapeReport, AgreesWithEnumeration) {
  const Geometry g = Geometry::make(72);
  const NumericalClass t = standard_class(StandardClass::thaddeus(), g);
  const auto rows = destabilizer_shape_report(t, g, 5);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_TRUE(rows[0].admissible);
  EXPECT_EQ(rows[0].k, 1);
  EXPECT_FALSE(rows[1].admissible);
  EXPECT_EQ(rows[2].k, 2);
  EXPECT_EQ(rows[2].tau_max, Rational(1, 36));
  EXPECT_FALSE(rows[3].admissible);

  for (std::int64_t n = 4; n <= 120; n += 3) {
    const Rational tau(1, n);
    for (const auto& c : thaddeus_at(72, tau)) {
      const ShapeRow& row = rows.at(c.cls.r - 1);
      ASSERT_TRUE(row.admissible) << "r=" << c.cls.r;
      EXPECT_EQ(c.k, row.k);
      EXPECT_LE(c.cls.ch2H, row.ch2_cap);
      EXPECT_GE(c.cls.ch2H, row.ch2_floor_at(tau));
      EXPECT_LE(tau, row.tau_max);
    }
  }
  EXPECT_THROW(destabilizer_shape_report(standard_class(StandardClass::o_shift(), g), g, 3), UnsupportedTarget);
}

TEST(Enumerate, GenericTargetUsesDerivedRankBound) {
  const Geometry g = Geometry::make(10);
  const NumericalClass target{2, Rational(15), Rational(3)};
  const TiltPoint p = TiltPoint::make(Rational(1, 3), Rational(1, 4));
  const auto cands = enumerate_destabilizers(target, p, g);
  for (const auto& c : cands) {
    const SlopeOrder o = slope_cmp(c.cls, target, p, g);
    EXPECT_TRUE(o == SlopeOrder::Greater || o == SlopeOrder::Equal || o == SlopeOrder::LeftMaximalPhase);
    EXPECT_LE(c.cls.ch2H, bogomolov_cap(c.cls.r, c.cls.c1H, g));
  }
}
