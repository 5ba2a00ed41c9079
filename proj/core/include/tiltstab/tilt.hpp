#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tiltstab/lattice.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab {

/// A point s + it of the upper strip, stored as (s, τ = t²) so that it stays rational.
struct TiltPoint {
  Rational s;
  Rational tau;

  /// Throws PreconditionViolated unless tau > 0.
  static TiltPoint make(Rational s, Rational tau);
  /// Builds the point from t itself (t > 0); t is squared.
  static TiltPoint from_t(Rational s, const Rational& t);
  /// Parses "s,t2", e.g. "1/2,1/9".
  static TiltPoint parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const TiltPoint&, const TiltPoint&) = default;
};

/// r_s = c1H - s·r·hn.
Rational rank_s(const NumericalClass& cls, const Rational& s, const Geometry& g);

/// d_(s,t) = ch2H - s·c1H + ((s² - τ)/2)·r·hn.
Rational deg_st(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g);

/// Z = -d_(s,t) + i·t·r_s, with the imaginary part stored divided by t.
struct CentralCharge {
  Rational re;
  Rational im_over_t;

  bool is_zero() const { return re.is_zero() && im_over_t.is_zero(); }
  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

CentralCharge central_charge(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g);

/// Expands -∫ e^{-(s+it)H} ch(E) H^{n-2} as a polynomial in t over Q(i), reduces
/// t² to τ, and checks it against central_charge term by term.
bool verify_compact_form(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g);

/// μ_{s+it} = num / (t·den) kept projectively; t > 0 never needs to materialize.
struct ProjectiveSlope {
  Rational num;  // d_(s,t)
  Rational den;  // r_s

  bool zero_charge() const { return num.is_zero() && den.is_zero(); }
  bool maximal_phase() const { return den.is_zero() && num.sign() > 0; }
  /// μ·t = num/den, for human output only; empty when den = 0.
  std::optional<Rational> display() const;
};

ProjectiveSlope slope_frac(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g);

enum class SlopeOrder {
  Less,
  Equal,
  Greater,
  LeftMaximalPhase,   // only the left side has r_s = 0, d > 0
  RightMaximalPhase,
  LeftZeroCharge,     // the left side has Z = 0
  RightZeroCharge,
  BothZeroCharge,
};

const char* to_string(SlopeOrder order);

SlopeOrder compare_slopes(const ProjectiveSlope& a, const ProjectiveSlope& b);
SlopeOrder slope_cmp(const NumericalClass& a, const NumericalClass& b, const TiltPoint& pt,
                     const Geometry& g);

/// s < μ_H(cls) <= s + (1-s)/r: the slope window for subobjects of L ⊗ I_Z.
bool sub_window_L(const NumericalClass& cls, const Rational& s, const Geometry& g);
/// s(1 - 1/r) < μ_H(cls) <= s: the window for H^{-1} of quotients of O[1].
bool quot_window_O(const NumericalClass& cls, const Rational& s, const Geometry& g);
/// μ_H(cls) = s exactly; the heart convention puts such sheaves in F_s.
bool on_heart_boundary(const NumericalClass& cls, const Rational& s, const Geometry& g);

/// Returns d_(s,t) for a class with r_s = 0, after checking the decomposition
/// d = (τ/2)·ρ·hn + (Bogomolov cap - ch2) of its unshifted sheaf part (rank ρ).
/// Accepts shifted classes (r < 0) satisfying the cap and torsion classes
/// (r = 0, c1H = 0, ch2H >= 0). Throws PreconditionViolated otherwise.
Rational positivity_margin(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g);

}  // namespace tiltstab
