#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tiltstab/lattice.hpp"
#include "tiltstab/rational.hpp"
#include "tiltstab/tilt.hpp"

namespace tiltstab {

/// Polynomial in (s, τ) with exact coefficients, keyed by (deg_s, deg_tau).
class WallPolynomial {
 public:
  using Monomial = std::pair<int, int>;

  const Rational& coeff(int deg_s, int deg_tau) const;
  void add_term(int deg_s, int deg_tau, const Rational& c);
  Rational evaluate(const Rational& s, const Rational& tau) const;
  bool is_zero() const;
  int total_degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  friend WallPolynomial operator*(const WallPolynomial& a, const WallPolynomial& b);
  friend WallPolynomial operator-(const WallPolynomial& a, const WallPolynomial& b);

 private:
  std::map<Monomial, Rational> terms_;  // zero coefficients are never stored
};

/// d_(s,t)(a)·r_s(b) - d_(s,t)(b)·r_s(a), expanded from the linear forms.
WallPolynomial wall_polynomial(const NumericalClass& a, const NumericalClass& b, const Geometry& g);

struct Wall {
  enum class Kind { Circle, VerticalLine, Empty, Everywhere };

  Kind kind = Kind::Empty;
  Rational center;     // Circle: center on the s-axis; VerticalLine: s0
  Rational radius_sq;  // Circle only, > 0

  static Wall circle(Rational center, Rational radius_sq) {
    return {Kind::Circle, std::move(center), std::move(radius_sq)};
  }
  static Wall vertical(Rational s0) { return {Kind::VerticalLine, std::move(s0), Rational(0)}; }
  static Wall empty() { return {Kind::Empty, Rational(0), Rational(0)}; }
  static Wall everywhere() { return {Kind::Everywhere, Rational(0), Rational(0)}; }

  /// Whether the wall has a point with 0 < s < 1 (and τ > 0).
  bool meets_open_strip() const;

  friend bool operator==(const Wall&, const Wall&) = default;
};

std::string to_string(const Wall& w);

Wall wall(const NumericalClass& a, const NumericalClass& b, const Geometry& g);

enum class WallSide { Above, On, Below, Undefined };
const char* to_string(WallSide side);

/// Position of a's slope relative to b's at pt. Maximal phase counts as above;
/// a vanishing central charge on either side gives Undefined.
WallSide side(const NumericalClass& a, const NumericalClass& b, const TiltPoint& pt, const Geometry& g);

/// (s - center)² + τ < radius² for a Circle wall.
bool in_circle(const TiltPoint& pt, const Wall& circle);

/// (s - 1/2)² + τ < 1/4.
bool kodaira_region(const TiltPoint& pt);

struct LadderRow {
  std::int64_t d = 0;
  Rational radius_sq;          // 1/4 - 2d/hn, may be <= 0
  bool exists = false;         // radius_sq > 0
  bool rank1_wall = false;     // a rank-one destabilizing wall with τ > 0
  bool above_one_sixth = false;  // radius_sq > 1/36
  std::string flip_label;
};

/// Rank-one walls of the class (0, H, H²/2) on the line s = 1/2, one row per d = 0..d_max.
std::vector<LadderRow> thaddeus_ladder(const Geometry& g, std::int64_t d_max);

}  // namespace tiltstab
