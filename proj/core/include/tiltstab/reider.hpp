#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiltstab/lattice.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab {

enum class Rel { Less, LessEq, Equal, GreaterEq, Greater };
const char* to_string(Rel rel);

/// One re-checkable inequality "lhs rel rhs" with the fact it comes from.
struct CertificateStep {
  std::string name;
  Rational lhs;
  Rel rel = Rel::Equal;
  Rational rhs;
  std::string anchor;

  bool holds() const;
};

using Certificate = std::vector<CertificateStep>;

enum class VerdictStatus { VanishingGuaranteed, ConditionalOnCurves, Inconclusive };
const char* to_string(VerdictStatus status);

struct ReiderVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::vector<DivisorData> witnesses;  // divisor classes that must be non-effective
  Certificate certificate;
};

/// A stable extension of L ⊗ I_Z by O forces hn <= 4d. Needs d >= 1.
bool stable_extension_possible(const Geometry& g, std::int64_t d);

struct ObstructionRow {
  DivisorData curve;
  bool violates_c = false;  // C² = d although hn > 4d
  bool violates_d = false;  // C² > 0 although hn > (d+1)²
};

/// Every (C·H, C²) with 1 <= C·H <= hn/2, C·H <= C² + d, -d < C² <= d and Hodge,
/// annotated with the two refinements that apply under the size of hn.
std::vector<ObstructionRow> scan_obstruction_curves(const Geometry& g, std::int64_t d);

/// Rows of scan_obstruction_curves that survive the applicable refinements,
/// ordered by C² descending then C·H ascending.
std::vector<DivisorData> enumerate_obstruction_curves(const Geometry& g, std::int64_t d);

ReiderVerdict reider_classical(const Geometry& g, std::int64_t d,
                               const std::vector<DivisorData>& excluded_curves = {});

struct FujitaBound {
  std::int64_t multiple = 0;
  Certificate certificate;
};

/// K_S + (d+2)L separates length-d subschemes for any ample L.
FujitaBound fujita_classical(std::int64_t d);

/// Constraint window on the Q-divisor C = D/r attached to a rank-r destabilizer
/// at s = 1/2 on the wall τ = 1/4 - 2d/hn.
struct BridgelandShape {
  std::int64_t r = 0;
  Rational cH_lower;  // exclusive: (1 - 1/r)·hn/2 < C·H
  Rational cH_upper;  // inclusive: C·H <= hn/2
  Rational c2_bound;  // exclusive: C² > cH_lower - 2d
  bool eliminated = false;
  std::string reason;
  Certificate certificate;
};

/// One row per r from 1 up to the last rank the Hodge index leaves open.
/// Throws PreconditionViolated unless hn > 8d.
std::vector<BridgelandShape> bridgeland_obstruction_shapes(const Geometry& g, std::int64_t d);

ReiderVerdict reider_bridgeland(const Geometry& g, std::int64_t d);

/// K_S + (2d+2)L ⊗ I_W ⊗ I_Z has vanishing H¹ for any ample L.
FujitaBound fujita_bridgeland(std::int64_t d);

struct VanishingResult {
  bool vanishes = false;
  Certificate certificate;
};

/// With Pic = ZH: vanishing iff hn > 8d. Throws RequiresPicardRankOne.
VanishingResult picard_rank_one_vanishing(const Geometry& g, std::int64_t d);

}  // namespace tiltstab
