#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sampling.hpp"
#include "tiltstab/destab.hpp"
#include "tiltstab/reider.hpp"

using namespace tiltstab;

// Small τ lets high-rank classes in with c2 beyond 60, so the box is widened.
TEST(OracleEquivalence, ThaddeusBoxAtAssortedHeights) {
  const mpq_class taus[] = {mpq_class(1, 5), mpq_class(1, 12), mpq_class(2, 49), mpq_class(1, 100)};
  for (std::int64_t hn = 1; hn <= 24; hn += 1) {
    const Geometry g = Geometry::make(hn);
    const NumericalClass t = standard_class(StandardClass::thaddeus(), g);
    for (const auto& tau : taus) {
      const auto engine = enumerate_destabilizers(t, TiltPoint::make(Rational(1, 2), Rational::from_mpq(tau)), g);
      const auto box = oracle::thaddeus_box(hn, tau, 400);
      ASSERT_EQ(engine.size(), box.size()) << "hn=" << hn << " tau=" << tau;
      for (std::size_t i = 0; i < box.size(); ++i) {
        EXPECT_EQ(std::make_tuple(engine[i].cls.r, engine[i].k, engine[i].c2), box[i].key);
        EXPECT_EQ(engine[i].relation == Relation::OnWall, box[i].on_wall);
      }
    }
  }
}

TEST(OracleEquivalence, ObstructionBoxOnRandomInputs) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t hn = sampling::uniform(rng, 1, 400);
    const std::int64_t d = sampling::uniform(rng, 1, 12);
    std::vector<std::pair<std::int64_t, std::int64_t>> flat;
    for (const auto& c : enumerate_obstruction_curves(Geometry::make(hn), d)) flat.emplace_back(c.cH, c.c2);
    EXPECT_EQ(flat, oracle::obstruction_box(hn, d)) << "hn=" << hn << " d=" << d;
  }
}

TEST(Verdicts, WitnessesSatisfyTheirInequalities) {
  for (std::int64_t hn = 1; hn <= 200; hn += 7) {
    for (std::int64_t d = 1; d <= 8; ++d) {
      const Geometry g = Geometry::make(hn);
      const ReiderVerdict classical = reider_classical(g, d);
      for (const auto& c : classical.witnesses) {
        EXPECT_LE(c.c2, 0);
        EXPECT_LE(2 * c.cH, hn);
        EXPECT_LE(c.cH, c.c2 + d);
        EXPECT_LE(c.c2 * hn, c.cH * c.cH);
      }
      const ReiderVerdict bridgeland = reider_bridgeland(g, d);
      for (const auto& c : bridgeland.witnesses) {
        EXPECT_LE(c.c2, 0);
        EXPECT_GT(c.cH, 0);
        EXPECT_LE(c.cH, c.c2 + 2 * d);
      }
      for (const auto* v : {&classical, &bridgeland}) {
        for (const auto& step : v->certificate) EXPECT_TRUE(step.holds()) << step.name;
        if (v->status == VerdictStatus::VanishingGuaranteed) EXPECT_TRUE(v->witnesses.empty());
      }
    }
  }
}
