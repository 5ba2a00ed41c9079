#include "tiltstab/reider.hpp"

#include <algorithm>
#include <stdexcept>

#include "tiltstab/destab.hpp"
#include "tiltstab/errors.hpp"
#include "tiltstab/tilt.hpp"
#include "tiltstab/walls.hpp"

namespace tiltstab {

namespace {

constexpr const char* kBogomolov = "bogomolov-inequality";
constexpr const char* kHodge = "hodge-index";
constexpr const char* kReiderHypothesis = "reider-hypothesis";
constexpr const char* kCurveWindow = "destabilizing-curve-window";
constexpr const char* kBridgeland = "bridgeland-reider";
constexpr const char* kPicardOne = "picard-rank-one-stability";
constexpr const char* kFujita = "fujita-bound";

void require_length(std::int64_t d) {
  if (d < 1) throw PreconditionViolated("subscheme length d must be >= 1, got " + std::to_string(d));
}

void add_step(Certificate& cert, std::string name, Rational lhs, Rel rel, Rational rhs,
              const char* anchor) {
  CertificateStep step{std::move(name), std::move(lhs), rel, std::move(rhs), anchor};
  if (!step.holds()) throw std::logic_error("certificate step does not hold: " + step.name);
  cert.push_back(std::move(step));
}

// Records whichever of <, =, > actually holds.
void add_comparison(Certificate& cert, std::string name, const Rational& lhs, const Rational& rhs,
                    const char* anchor) {
  const Rel rel = lhs < rhs ? Rel::Less : (lhs > rhs ? Rel::Greater : Rel::Equal);
  add_step(cert, std::move(name), lhs, rel, rhs, anchor);
}

bool witness_order(const DivisorData& a, const DivisorData& b) {
  if (a.c2 != b.c2) return a.c2 > b.c2;
  return a.cH < b.cH;
}

std::string curve_label(const DivisorData& c) {
  return "C.H=" + std::to_string(c.cH) + ", C^2=" + std::to_string(c.c2);
}

void add_classical_witness_steps(Certificate& cert, const Geometry& g, std::int64_t d,
                                 const DivisorData& c) {
  const std::string tag = " [" + curve_label(c) + "]";
  add_step(cert, "(a) 2 C.L <= L^2" + tag, Rational(2 * c.cH), Rel::LessEq, Rational(g.hn), kCurveWindow);
  add_step(cert, "(b) C.L <= C^2 + d" + tag, Rational(c.cH), Rel::LessEq, Rational(c.c2 + d), kCurveWindow);
  add_step(cert, "C^2 L^2 <= (C.L)^2" + tag, Rational(c.c2) * Rational(g.hn), Rel::LessEq,
           Rational(c.cH) * Rational(c.cH), kHodge);
  add_step(cert, "(C.L)^2 <= L^2 (C^2 + d)/2" + tag, Rational(c.cH) * Rational(c.cH), Rel::LessEq,
           Rational(g.hn) * Rational(c.c2 + d) / Rational(2), kHodge);
}

}  // namespace

const char* to_string(Rel rel) {
  switch (rel) {
    case Rel::Less: return "<";
    case Rel::LessEq: return "<=";
    case Rel::Equal: return "=";
    case Rel::GreaterEq: return ">=";
    case Rel::Greater: return ">";
  }
  return "?";
}

bool CertificateStep::holds() const {
  switch (rel) {
    case Rel::Less: return lhs < rhs;
    case Rel::LessEq: return lhs <= rhs;
    case Rel::Equal: return lhs == rhs;
    case Rel::GreaterEq: return lhs >= rhs;
    case Rel::Greater: return lhs > rhs;
  }
  return false;
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::VanishingGuaranteed: return "VanishingGuaranteed";
    case VerdictStatus::ConditionalOnCurves: return "ConditionalOnCurves";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool stable_extension_possible(const Geometry& g, std::int64_t d) {
  require_length(d);
  return g.hn <= 4 * d;
}

std::vector<ObstructionRow> scan_obstruction_curves(const Geometry& g, std::int64_t d) {
  require_length(d);
  const bool refine_c = g.hn > 4 * d;
  const bool refine_d = g.hn > (d + 1) * (d + 1);
  std::vector<ObstructionRow> rows;
  for (std::int64_t c2 = d; c2 > -d; --c2) {
    for (std::int64_t cH = 1; 2 * cH <= g.hn && cH <= c2 + d; ++cH) {
      const DivisorData curve{cH, c2};
      if (!hodge_ok(curve, g)) continue;
      rows.push_back({curve, refine_c && c2 == d, refine_d && c2 > 0});
    }
  }
  return rows;
}

std::vector<DivisorData> enumerate_obstruction_curves(const Geometry& g, std::int64_t d) {
  std::vector<DivisorData> out;
  for (const auto& row : scan_obstruction_curves(g, d)) {
    if (!row.violates_c && !row.violates_d) out.push_back(row.curve);
  }
  std::sort(out.begin(), out.end(), witness_order);
  return out;
}

ReiderVerdict reider_classical(const Geometry& g, std::int64_t d,
                               const std::vector<DivisorData>& excluded_curves) {
  require_length(d);
  ReiderVerdict verdict;
  Certificate& cert = verdict.certificate;
  const Rational hn(g.hn);
  const Rational bound((d + 1) * (d + 1));

  if (hn <= bound) {
    add_step(cert, "L^2 <= (d+1)^2: hypothesis fails", hn, Rel::LessEq, bound, kReiderHypothesis);
    verdict.status = VerdictStatus::Inconclusive;
    return verdict;
  }
  add_step(cert, "L^2 > (d+1)^2", hn, Rel::Greater, bound, kReiderHypothesis);
  add_step(cert, "L^2 > 4d, so (c) rules out C^2 = d", hn, Rel::Greater, Rational(4 * d), kBogomolov);
  add_step(cert, "L^2 > (d+1)^2, so (d) rules out C^2 > 0", hn, Rel::Greater, bound, kHodge);

  std::int64_t excluded = 0;
  for (const auto& curve : enumerate_obstruction_curves(g, d)) {
    if (curve.c2 > 0) continue;
    if (std::find(excluded_curves.begin(), excluded_curves.end(), curve) != excluded_curves.end()) {
      ++excluded;
      continue;
    }
    add_classical_witness_steps(cert, g, d, curve);
    verdict.witnesses.push_back(curve);
  }
  add_step(cert, "witness classes declared non-effective", Rational(excluded), Rel::GreaterEq, Rational(0),
           kReiderHypothesis);
  verdict.status = verdict.witnesses.empty() ? VerdictStatus::VanishingGuaranteed
                                             : VerdictStatus::ConditionalOnCurves;
  return verdict;
}

FujitaBound fujita_classical(std::int64_t d) {
  require_length(d);
  FujitaBound out;
  out.multiple = d + 2;
  const Rational m(out.multiple);
  add_step(out.certificate, "(mL)^2 >= m^2 > (d+1)^2", m * m, Rel::Greater, Rational((d + 1) * (d + 1)),
           kFujita);
  add_step(out.certificate, "C.(mL) >= m > d >= C^2 + d when C^2 <= 0", m, Rel::Greater, Rational(d), kFujita);
  return out;
}

std::vector<BridgelandShape> bridgeland_obstruction_shapes(const Geometry& g, std::int64_t d) {
  require_length(d);
  if (g.hn <= 8 * d) {
    throw PreconditionViolated("the wall semicircle is empty unless H^2 > 8d (H^2=" + std::to_string(g.hn) +
                               ", d=" + std::to_string(d) + ")");
  }
  const Rational hn(g.hn);
  const Rational two_d(2 * d);
  const bool strong = g.hn > (2 * d + 1) * (2 * d + 1);

  std::vector<BridgelandShape> rows;
  for (std::int64_t r = 1; r * r * (g.hn - 8 * d) < g.hn; ++r) {
    BridgelandShape row;
    row.r = r;
    row.cH_lower = (Rational(1) - Rational(1, r)) * hn / Rational(2);
    row.cH_upper = hn / Rational(2);
    row.c2_bound = row.cH_lower - two_d;
    add_step(row.certificate, "r^2 (H^2 - 8d) < H^2 leaves the window open under Hodge",
             Rational(r * r * (g.hn - 8 * d)), Rel::Less, hn, kHodge);

    if (strong && r >= 3) {
      row.eliminated = true;
      row.reason = "r >= 3 forces C^2 > (2d+1)/3 >= 1, then the kappa-sweep contradicts H^2 > (2d+1)^2";
      add_step(row.certificate, "C.H > (1 - 1/r) H^2/2 >= H^2/3", row.cH_lower, Rel::GreaterEq, hn / Rational(3),
               kBridgeland);
      add_step(row.certificate, "H^2/3 > (8d+1)/3", hn / Rational(3), Rel::Greater, Rational(8 * d + 1, 3),
               kBridgeland);
      add_step(row.certificate, "C^2 > (2d+1)/3 >= 1", Rational(2 * d + 1, 3), Rel::GreaterEq, Rational(1),
               kBridgeland);
    } else if (strong && r == 2) {
      row.eliminated = true;
      row.reason = "r = 2 forces C.H >= 2d+1 and C^2 >= 1, then the kappa-sweep contradicts H^2 > (2d+1)^2";
      add_step(row.certificate, "H^2/4 >= 2d + 1/2", hn / Rational(4), Rel::GreaterEq,
               two_d + Rational(1, 2), kBridgeland);
      // C = D/2, so C.H lies in (1/2)Z and exceeds H^2/4.
      const Rational least_half_above = Rational((g.hn / 2) + 1, 2);
      add_step(row.certificate, "C.H >= 2d + 1", least_half_above, Rel::GreaterEq, Rational(2 * d + 1),
               kBridgeland);
      add_step(row.certificate, "C^2 >= C.H - 2d >= 1", Rational(2 * d + 1) - two_d, Rel::GreaterEq, Rational(1),
               kBridgeland);
    } else if (r == 1) {
      row.reason = "honest divisor; survives only with C^2 <= 0";
    } else {
      row.reason = "open: H^2 <= (2d+1)^2";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ReiderVerdict reider_bridgeland(const Geometry& g, std::int64_t d) {
  require_length(d);
  ReiderVerdict verdict;
  Certificate& cert = verdict.certificate;
  const Rational hn(g.hn);
  const Rational bound((2 * d + 1) * (2 * d + 1));

  if (hn <= bound) {
    add_step(cert, "H^2 <= (2d+1)^2: hypothesis fails", hn, Rel::LessEq, bound, kBridgeland);
    verdict.status = VerdictStatus::Inconclusive;
    return verdict;
  }
  add_step(cert, "H^2 > (2d+1)^2", hn, Rel::Greater, bound, kBridgeland);
  add_step(cert, "(2d+1)^2 >= 8d+1", bound, Rel::GreaterEq, Rational(8 * d + 1), kBridgeland);
  add_step(cert, "H^2 > 8d: wall semicircle at s = 1/2 is nonempty", hn, Rel::Greater, Rational(8 * d),
           kBridgeland);

  for (const auto& row : bridgeland_obstruction_shapes(g, d)) {
    for (const auto& step : row.certificate) {
      CertificateStep copy = step;
      copy.name = "r=" + std::to_string(row.r) + ": " + copy.name;
      cert.push_back(std::move(copy));
    }
  }

  // Hodge squeeze: C²·H² <= (C.H)² <= (H²/2)(C² + 2d) gives C² <= 2d, and a value
  // C² = κ >= 1 gives H² <= (1 + 2d/κ)², decreasing in κ.
  Rational previous;
  for (std::int64_t kappa = 1; kappa <= 2 * d; ++kappa) {
    const Rational value = square(Rational(1) + Rational(2 * d, kappa));
    add_step(cert, "kappa=" + std::to_string(kappa) + ": (1 + 2d/kappa)^2 <= (2d+1)^2", value, Rel::LessEq,
             bound, kHodge);
    if (kappa > 1) {
      add_step(cert, "kappa-sweep decreasing at kappa=" + std::to_string(kappa), value, Rel::Less, previous,
               kHodge);
    }
    previous = value;
  }
  add_step(cert, "H^2 exceeds every kappa-sweep value, so C^2 <= 0 and r = 1", hn, Rel::Greater, bound, kHodge);

  for (std::int64_t c2 = 0; c2 > -2 * d; --c2) {
    for (std::int64_t cH = 1; cH <= c2 + 2 * d && 2 * cH <= g.hn; ++cH) {
      const DivisorData curve{cH, c2};
      if (!hodge_ok(curve, g)) continue;
      const std::string tag = " [" + curve_label(curve) + "]";
      add_step(cert, "0 < C.H" + tag, Rational(cH), Rel::Greater, Rational(0), kBridgeland);
      add_step(cert, "C.H <= C^2 + 2d" + tag, Rational(cH), Rel::LessEq, Rational(c2 + 2 * d), kBridgeland);
      add_step(cert, "C^2 <= 0" + tag, Rational(c2), Rel::LessEq, Rational(0), kBridgeland);
      verdict.witnesses.push_back(curve);
    }
  }
  std::sort(verdict.witnesses.begin(), verdict.witnesses.end(), witness_order);
  verdict.status = verdict.witnesses.empty() ? VerdictStatus::VanishingGuaranteed
                                             : VerdictStatus::ConditionalOnCurves;
  return verdict;
}

FujitaBound fujita_bridgeland(std::int64_t d) {
  require_length(d);
  FujitaBound out;
  out.multiple = 2 * d + 2;
  const Geometry unit = Geometry::make(1);
  // (mL)² read off ch2 of O(mH) with H² = 1, the smallest ample self-intersection.
  const NumericalClass scaled = twist(NumericalClass{1, 0, 0}, out.multiple, unit);
  const Rational m_sq = Rational(2) * scaled.ch2H;
  add_step(out.certificate, "(mL)^2 >= m^2 > (2d+1)^2", m_sq, Rel::Greater,
           Rational((2 * d + 1) * (2 * d + 1)), kFujita);
  add_step(out.certificate, "C.(mL) >= m > 2d >= C^2 + 2d when C^2 <= 0", Rational(out.multiple), Rel::Greater,
           Rational(2 * d), kFujita);
  return out;
}

VanishingResult picard_rank_one_vanishing(const Geometry& g, std::int64_t d) {
  if (!g.pic_rank_one) throw RequiresPicardRankOne("vanishing criterion assumes Pic = ZH");
  if (d < 0) throw PreconditionViolated("subscheme length d must be >= 0");
  VanishingResult out;
  Certificate& cert = out.certificate;
  const Rational hn(g.hn);
  if (g.hn <= 8 * d) {
    add_step(cert, "H^2 <= 8d: wall semicircle is empty", hn, Rel::LessEq, Rational(8 * d), kPicardOne);
    return out;
  }
  add_step(cert, "H^2 > 8d", hn, Rel::Greater, Rational(8 * d), kPicardOne);

  const NumericalClass twisted = standard_class(StandardClass::l_ideal(d), g);
  const NumericalClass dual = standard_class(StandardClass::ideal_dual_shift(d), g);
  const Wall w = wall(twisted, dual, g);
  if (w.kind != Wall::Kind::Circle) throw std::logic_error("expected a circular wall for L(x)I_Z vs I_W^v[1]");
  add_step(cert, "wall center", w.center, Rel::Equal, Rational(1, 2), kPicardOne);
  add_step(cert, "wall radius^2 = 1/4 - 2d/H^2 > 0", w.radius_sq, Rel::Greater, Rational(0), kPicardOne);

  const TiltPoint top = TiltPoint::make(Rational(1, 2), w.radius_sq);
  auto finite_count = [&](const NumericalClass& target) {
    const auto cands = enumerate_destabilizers(target, top, g);
    return std::count_if(cands.begin(), cands.end(),
                         [](const auto& c) { return c.phase == PhaseFlag::Finite; });
  };
  const auto n_twisted = finite_count(twisted);
  const auto n_dual = finite_count(dual);
  add_comparison(cert, "finite-phase destabilizers of L(x)I_Z at the wall top", Rational(n_twisted), Rational(0),
                 kPicardOne);
  add_comparison(cert, "finite-phase destabilizers of I_W^v[1] at the wall top", Rational(n_dual), Rational(0),
                 kPicardOne);
  out.vanishes = n_twisted == 0 && n_dual == 0;
  return out;
}

}  // namespace tiltstab
