#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltstab/lattice.hpp"
#include "tiltstab/rational.hpp"
#include "tiltstab/tilt.hpp"

namespace tiltstab {

enum class Relation { OnWall, StrictlyAbove };
enum class PhaseFlag { Finite, MaximalPhase };
enum class CandidateSide { SubSheaf, ShiftedSub, TorsionSub };

const char* to_string(Relation relation);
const char* to_string(PhaseFlag phase);
const char* to_string(CandidateSide side);

/// A lattice class w = (r, kH, k²H²/2 - c2) that passes every numerical
/// necessary condition for destabilizing the target at a tilt point.
/// Passing does not mean an actual subobject exists.
struct DestabilizerCandidate {
  NumericalClass cls;
  std::int64_t k = 0;
  std::int64_t c2 = 0;
  Relation relation = Relation::StrictlyAbove;
  PhaseFlag phase = PhaseFlag::Finite;
  CandidateSide side = CandidateSide::SubSheaf;

  friend bool operator==(const DestabilizerCandidate&, const DestabilizerCandidate&) = default;
};

struct EnumerationOptions {
  std::optional<std::int64_t> rank_max;
  bool include_shifted = false;
  bool include_torsion = false;
};

/// (r, k·hn, k²·hn/2 - c2).
NumericalClass lattice_class(std::int64_t r, std::int64_t k, std::int64_t c2, const Geometry& g);

/// c1H² / (2·r·hn): the largest ch2H of an H-stable sheaf of rank r.
Rational bogomolov_cap(std::int64_t r, const Rational& c1H, const Geometry& g);

enum class TargetKind { TwistedIdeal, IdealDualShift, Thaddeus, Generic };

struct TargetInfo {
  TargetKind kind = TargetKind::Generic;
  std::int64_t length = 0;  // d for L ⊗ I_Z and I_W^∨[1]; 0 otherwise
};

/// Recognizes L ⊗ I_Z (r = 1, c1 = H), I_W^∨[1] (r = -1, c1 = 0) and (0, H, H²/2).
TargetInfo classify_target(const NumericalClass& target, const Geometry& g);

/// For the class (0, H, H²/2) at s = 1/2: the largest r >= 1 with 4r²τ <= 1,
/// or 0 when τ > 1/4 and no rank is admissible. Throws UnsupportedTarget otherwise.
std::int64_t rank_bound_at(const NumericalClass& target, const TiltPoint& pt, const Geometry& g);

/// Enumerates candidates ordered by (r, k, c2).
///
/// Sheaf-side ranks are bounded by rank_bound_at for the Thaddeus class at
/// s = 1/2, and otherwise by the first rank past which the Bogomolov cap can
/// no longer reach the slope of the target. Shifted candidates need
/// opts.rank_max. Throws InfiniteFamily when some (r, k) cell leaves ch2H
/// unbounded, PreconditionViolated unless 0 < s < 1 and the target has
/// r_s >= 0 with nonzero central charge.
std::vector<DestabilizerCandidate> enumerate_destabilizers(const NumericalClass& target,
                                                           const TiltPoint& pt, const Geometry& g,
                                                           const EnumerationOptions& opts = {});

struct ShapeRow {
  std::int64_t r = 0;
  bool admissible = false;
  std::int64_t k = 0;           // c1 = kH, admissible rows only
  Rational ch2_floor_const;     // ch2H >= ch2_floor_const + ch2_floor_tau·τ
  Rational ch2_floor_tau;
  Rational ch2_cap;             // ch2H <= Bogomolov cap
  Rational tau_max;             // window nonempty iff τ <= tau_max
  std::string note;

  Rational ch2_floor_at(const Rational& tau) const { return ch2_floor_const + ch2_floor_tau * tau; }
};

/// Shape constraints on sheaf destabilizers of (0, H, H²/2) at s = 1/2 for r = 1..max_rank:
/// r odd, k = (r+1)/2, ch2H in [floor(τ), cap], τ <= 1/(4r²).
std::vector<ShapeRow> destabilizer_shape_report(const NumericalClass& target, const Geometry& g,
                                                std::int64_t max_rank);

}  // namespace tiltstab
