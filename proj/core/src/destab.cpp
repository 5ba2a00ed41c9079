#include "tiltstab/destab.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "tiltstab/errors.hpp"

namespace tiltstab {

namespace {

const Rational kHalf(1, 2);

struct Bounds {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  void raise_lo(const Rational& v) {
    if (!lo || v > *lo) lo = v;
  }
  void lower_hi(const Rational& v) {
    if (!hi || v < *hi) hi = v;
  }
};

// Bogomolov for the sheaf behind a class of either sign of rank.
bool satisfies_cap(const NumericalClass& cls, const Geometry& g) {
  if (cls.r > 0) return cls.ch2H <= bogomolov_cap(cls.r, cls.c1H, g);
  if (cls.r < 0) {
    const NumericalClass sheaf = shift1(cls);
    return sheaf.ch2H <= bogomolov_cap(sheaf.r, sheaf.c1H, g);
  }
  return true;
}

CandidateSide side_of(std::int64_t r) {
  if (r > 0) return CandidateSide::SubSheaf;
  if (r < 0) return CandidateSide::ShiftedSub;
  return CandidateSide::TorsionSub;
}

struct Context {
  const NumericalClass& target;
  const TiltPoint& pt;
  const Geometry& g;
  TargetInfo info;
  Rational target_rank;    // r_s(target)
  Rational target_degree;  // d_(s,t)(target)
};

bool side_allowed(const Context& ctx, CandidateSide side, const EnumerationOptions& opts) {
  switch (ctx.info.kind) {
    case TargetKind::TwistedIdeal:
      // Subobjects of L ⊗ I_Z in the heart are torsion-free sheaves.
      return side == CandidateSide::SubSheaf;
    case TargetKind::IdealDualShift:
      // Subobjects of O[1] and I_W^∨[1] are sheaves.
      if (side == CandidateSide::ShiftedSub) return false;
      return side == CandidateSide::SubSheaf || opts.include_torsion;
    default:
      if (side == CandidateSide::ShiftedSub) return opts.include_shifted;
      if (side == CandidateSide::TorsionSub) return opts.include_torsion;
      return true;
  }
}

// Heart windows on the (r, c1H) part of a candidate, where the target fixes them.
bool passes_heart_window(const Context& ctx, const NumericalClass& w) {
  const Rational& s = ctx.pt.s;
  switch (ctx.info.kind) {
    case TargetKind::TwistedIdeal:
      return w.r >= 1 && sub_window_L(w, s, ctx.g);
    case TargetKind::IdealDualShift: {
      const NumericalClass quotient = ctx.target - w;
      if (quotient.r > -1) return false;
      const NumericalClass h_minus_one{-quotient.r, -quotient.c1H, Rational(0)};
      return quot_window_O(h_minus_one, s, ctx.g);
    }
    default:
      return true;
  }
}

// Full exact predicate set; the enumeration windows only narrow where to look.
std::optional<DestabilizerCandidate> accept(const Context& ctx, std::int64_t r, std::int64_t k,
                                            std::int64_t c2) {
  const NumericalClass w = lattice_class(r, k, c2, ctx.g);
  const NumericalClass q = ctx.target - w;
  if (w.is_zero() || q.is_zero()) return std::nullopt;

  if (r == 0 && (w.c1H.sign() < 0 || (w.c1H.is_zero() && w.ch2H.sign() < 0))) return std::nullopt;
  if (!satisfies_cap(w, ctx.g) || !satisfies_cap(q, ctx.g)) return std::nullopt;

  const ProjectiveSlope sw = slope_frac(w, ctx.pt, ctx.g);
  const ProjectiveSlope sq = slope_frac(q, ctx.pt, ctx.g);
  if (sw.den.sign() < 0 || sq.den.sign() < 0) return std::nullopt;
  if (sw.den.is_zero() && sw.num.sign() <= 0) return std::nullopt;
  if (sq.den.is_zero() && sq.num.sign() <= 0) return std::nullopt;

  if (!passes_heart_window(ctx, w)) return std::nullopt;

  const ProjectiveSlope st{ctx.target_degree, ctx.target_rank};
  const SlopeOrder order = compare_slopes(sw, st);
  DestabilizerCandidate cand;
  cand.cls = w;
  cand.k = k;
  cand.c2 = c2;
  cand.side = side_of(r);
  cand.phase = sw.den.is_zero() ? PhaseFlag::MaximalPhase : PhaseFlag::Finite;
  switch (order) {
    case SlopeOrder::Equal: cand.relation = Relation::OnWall; break;
    case SlopeOrder::Greater:
    case SlopeOrder::LeftMaximalPhase: cand.relation = Relation::StrictlyAbove; break;
    default: return std::nullopt;
  }
  return cand;
}

// ch2H window for the cell (r, k) implied by the caps, the slope condition and
// admissibility of the quotient.
Bounds ch2_window(const Context& ctx, std::int64_t r, std::int64_t k) {
  const Geometry& g = ctx.g;
  const Rational& s = ctx.pt.s;
  const Rational c(k * g.hn);
  const Rational rank_hn(r * g.hn);
  const Rational rho = c - s * rank_hn;
  // deg_w = ch2H - base.
  const Rational base = s * c - (s * s - ctx.pt.tau) * kHalf * rank_hn;

  Bounds b;
  if (rho.sign() > 0) {
    b.raise_lo(base + ctx.target_degree * rho / ctx.target_rank);
  } else {
    b.raise_lo(base);
  }
  if (ctx.target_rank == rho) b.lower_hi(base + ctx.target_degree);

  if (r > 0) b.lower_hi(bogomolov_cap(r, c, g));
  if (r < 0) b.raise_lo(-bogomolov_cap(-r, -c, g));
  if (r == 0 && k == 0) b.raise_lo(Rational(0));

  const std::int64_t rq = ctx.target.r - r;
  const Rational cq = ctx.target.c1H - c;
  if (rq > 0) b.raise_lo(ctx.target.ch2H - bogomolov_cap(rq, cq, g));
  if (rq < 0) b.lower_hi(ctx.target.ch2H + bogomolov_cap(-rq, -cq, g));
  return b;
}

// Largest r >= 1 for which a rank-r sheaf under the Bogomolov cap can reach the
// target's slope: R² - τ·r²·hn² - 2·r·hn·min(0, d_T) >= 0, decreasing in r.
std::int64_t sheaf_rank_bound(const Context& ctx) {
  const Rational hn(ctx.g.hn);
  const Rational& R = ctx.target_rank;
  const Rational m0 = std::min(Rational(0), ctx.target_degree);
  auto feasible = [&](std::int64_t r) {
    const Rational rr(r);
    return R * R - ctx.pt.tau * rr * rr * hn * hn - Rational(2) * rr * hn * m0 >= Rational(0);
  };
  if (!feasible(1)) return 0;
  std::int64_t lo = 1;
  std::int64_t hi = 2;
  while (feasible(hi)) {
    lo = hi;
    if (hi > (std::int64_t{1} << 40)) throw InfiniteFamily("sheaf rank bound does not terminate");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

void scan_rank(const Context& ctx, std::int64_t r, std::vector<DestabilizerCandidate>& out) {
  const Rational hn(ctx.g.hn);
  const Rational sr = ctx.pt.s * Rational(r);
  const std::int64_t k_lo = sr.ceil();
  const std::int64_t k_hi = (sr + ctx.target_rank / hn).floor();
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    // Cheap rejection on (r, c1H) before the ch2H window.
    if (!passes_heart_window(ctx, lattice_class(r, k, 0, ctx.g))) continue;
    const Bounds b = ch2_window(ctx, r, k);
    if (b.lo && b.hi && *b.lo > *b.hi) continue;
    if (!b.lo || !b.hi) {
      throw InfiniteFamily("ch2H is unbounded for candidates with r=" + std::to_string(r) +
                           ", c1=" + std::to_string(k) + "H against target " + ctx.target.str());
    }
    const Rational half_k2_hn = Rational(k * k) * hn * kHalf;
    const std::int64_t c2_lo = (half_k2_hn - *b.hi).ceil();
    const std::int64_t c2_hi = (half_k2_hn - *b.lo).floor();
    for (std::int64_t c2 = c2_lo; c2 <= c2_hi; ++c2) {
      if (auto cand = accept(ctx, r, k, c2)) out.push_back(std::move(*cand));
    }
  }
}

}  // namespace

const char* to_string(Relation relation) {
  return relation == Relation::OnWall ? "OnWall" : "StrictlyAbove";
}

const char* to_string(PhaseFlag phase) {
  return phase == PhaseFlag::Finite ? "Finite" : "MaximalPhase";
}

const char* to_string(CandidateSide side) {
  switch (side) {
    case CandidateSide::SubSheaf: return "SubSheaf";
    case CandidateSide::ShiftedSub: return "ShiftedSub";
    case CandidateSide::TorsionSub: return "TorsionSub";
  }
  return "?";
}

NumericalClass lattice_class(std::int64_t r, std::int64_t k, std::int64_t c2, const Geometry& g) {
  const Rational kq(k);
  return {r, kq * Rational(g.hn), kq * kq * Rational(g.hn) * kHalf - Rational(c2)};
}

Rational bogomolov_cap(std::int64_t r, const Rational& c1H, const Geometry& g) {
  if (!g.pic_rank_one) throw RequiresPicardRankOne("Bogomolov cap in contracted form needs Pic = ZH");
  if (r < 1) throw PreconditionViolated("Bogomolov cap needs rank >= 1, got " + std::to_string(r));
  return c1H * c1H / (Rational(2) * Rational(r * g.hn));
}

TargetInfo classify_target(const NumericalClass& target, const Geometry& g) {
  const Rational hn(g.hn);
  if (target.r == 1 && target.c1H == hn) {
    const Rational d = hn * kHalf - target.ch2H;
    if (d.is_integer() && d.sign() >= 0) return {TargetKind::TwistedIdeal, d.floor()};
  }
  if (target.r == -1 && target.c1H.is_zero() && target.ch2H.is_integer() && target.ch2H.sign() >= 0) {
    return {TargetKind::IdealDualShift, target.ch2H.floor()};
  }
  if (target == standard_class(StandardClass::thaddeus(), g)) return {TargetKind::Thaddeus, 0};
  return {TargetKind::Generic, 0};
}

std::int64_t rank_bound_at(const NumericalClass& target, const TiltPoint& pt, const Geometry& g) {
  if (classify_target(target, g).kind != TargetKind::Thaddeus || pt.s != kHalf) {
    throw UnsupportedTarget("closed-form rank bound is only known for (0,H,H^2/2) at s = 1/2");
  }
  std::int64_t r = 0;
  while (Rational(4 * (r + 1) * (r + 1)) * pt.tau <= Rational(1)) ++r;
  return r;
}

std::vector<DestabilizerCandidate> enumerate_destabilizers(const NumericalClass& target,
                                                           const TiltPoint& pt, const Geometry& g,
                                                           const EnumerationOptions& opts) {
  if (!g.pic_rank_one) throw RequiresPicardRankOne("candidate lattice (r, kH, c2) needs Pic = ZH");
  if (pt.s.sign() <= 0 || pt.s >= Rational(1)) {
    throw PreconditionViolated("enumeration needs 0 < s < 1, got s = " + pt.s.str());
  }
  if (opts.rank_max && *opts.rank_max < 0) throw PreconditionViolated("rank_max must be nonnegative");

  Context ctx{target, pt, g, classify_target(target, g), rank_s(target, pt.s, g), deg_st(target, pt, g)};
  if (ctx.target_rank.sign() < 0 || (ctx.target_rank.is_zero() && ctx.target_degree.sign() <= 0)) {
    throw PreconditionViolated("target " + target.str() + " is not in the heart at s = " + pt.s.str());
  }

  std::vector<DestabilizerCandidate> out;

  if (side_allowed(ctx, CandidateSide::ShiftedSub, opts)) {
    if (!opts.rank_max) {
      throw InfiniteFamily("shifted candidates have no derived rank bound; supply rank_max");
    }
    for (std::int64_t r = -*opts.rank_max; r <= -1; ++r) scan_rank(ctx, r, out);
  }
  if (side_allowed(ctx, CandidateSide::TorsionSub, opts)) scan_rank(ctx, 0, out);
  if (side_allowed(ctx, CandidateSide::SubSheaf, opts)) {
    std::int64_t bound = (ctx.info.kind == TargetKind::Thaddeus && pt.s == kHalf)
                             ? rank_bound_at(target, pt, g)
                             : sheaf_rank_bound(ctx);
    if (opts.rank_max) bound = std::min(bound, *opts.rank_max);
    for (std::int64_t r = 1; r <= bound; ++r) scan_rank(ctx, r, out);
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.cls.r, a.k, a.c2) < std::tie(b.cls.r, b.k, b.c2);
  });
  return out;
}

std::vector<ShapeRow> destabilizer_shape_report(const NumericalClass& target, const Geometry& g,
                                                std::int64_t max_rank) {
  if (classify_target(target, g).kind != TargetKind::Thaddeus) {
    throw UnsupportedTarget("shape report is derived for (0,H,H^2/2) only, got " + target.str());
  }
  if (max_rank < 1) throw PreconditionViolated("shape report needs max_rank >= 1");

  const Rational hn(g.hn);
  std::vector<ShapeRow> rows;
  for (std::int64_t r = 1; r <= max_rank; ++r) {
    ShapeRow row;
    row.r = r;
    // A destabilizer must have r_{1/2} = hn/2: k·hn - r·hn/2 = hn/2.
    if (r % 2 == 0) {
      row.note = "excluded: r_1/2 of a rank-" + std::to_string(r) + " sheaf is a multiple of hn, never hn/2";
      rows.push_back(std::move(row));
      continue;
    }
    row.admissible = true;
    row.k = (r + 1) / 2;
    const Rational c(row.k * g.hn);
    const Rational rank_hn(r * g.hn);
    // d_(1/2,t) >= 0  ⇔  ch2H >= c/2 - r·hn/8 + (r·hn/2)·τ.
    row.ch2_floor_const = c * kHalf - rank_hn / Rational(8);
    row.ch2_floor_tau = rank_hn * kHalf;
    row.ch2_cap = bogomolov_cap(r, c, g);
    row.tau_max = (row.ch2_cap - row.ch2_floor_const) / row.ch2_floor_tau;
    if (row.tau_max != Rational(1, 4 * r * r)) throw std::logic_error("shape window disagrees with t <= 1/(2r)");
    row.note = "c1 = " + std::to_string(row.k) + "H, t <= 1/" + std::to_string(2 * r);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tiltstab
