#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tiltstab/rational.hpp"

namespace tiltstab {

/// Polarization data for a smooth projective variety with ample H.
struct Geometry {
  std::int64_t hn = 1;       // H^n (H^2 on a surface)
  int dim = 2;               // n, either 2 or 3
  bool pic_rank_one = true;  // honest classes have c1 = kH with k integral

  /// Throws PreconditionViolated unless hn >= 1 and dim is 2 or 3.
  static Geometry make(std::int64_t hn, int dim = 2, bool pic_rank_one = true);

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

/// H-contracted Chern character (r, c1·H^{n-1}, ch2·H^{n-2}).
struct NumericalClass {
  std::int64_t r = 0;
  Rational c1H;
  Rational ch2H;

  NumericalClass() = default;
  NumericalClass(std::int64_t rank, Rational c1, Rational ch2)
      : r(rank), c1H(std::move(c1)), ch2H(std::move(ch2)) {}

  bool is_zero() const { return r == 0 && c1H.is_zero() && ch2H.is_zero(); }

  /// Parses "r,c1H,ch2H", e.g. "1,72,31" or "-1,0,3/2".
  static NumericalClass parse(std::string_view text);
  std::string str() const;

  NumericalClass& operator+=(const NumericalClass& o);
  NumericalClass& operator-=(const NumericalClass& o);
  friend NumericalClass operator+(NumericalClass a, const NumericalClass& b) { return a += b; }
  friend NumericalClass operator-(NumericalClass a, const NumericalClass& b) { return a -= b; }
  NumericalClass operator-() const { return {-r, -c1H, -ch2H}; }
  friend NumericalClass operator*(std::int64_t m, const NumericalClass& x) {
    return {m * x.r, Rational(m) * x.c1H, Rational(m) * x.ch2H};
  }

  friend bool operator==(const NumericalClass&, const NumericalClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const NumericalClass& cls);

/// Intersection numbers of a divisor C: C·H^{n-1} and C²·H^{n-2}.
struct DivisorData {
  std::int64_t cH = 0;
  std::int64_t c2 = 0;

  friend bool operator==(const DivisorData&, const DivisorData&) = default;
  friend auto operator<=>(const DivisorData&, const DivisorData&) = default;
};

/// c1H / (r·hn). Throws ZeroRankError when r = 0.
Rational mumford_slope(const NumericalClass& cls, const Geometry& g);

/// The shift [1]: negates every component.
NumericalClass shift1(const NumericalClass& cls);

/// Tensoring by O(mH). Throws RequiresPicardRankOne.
NumericalClass twist(const NumericalClass& cls, std::int64_t m, const Geometry& g);

/// True when k = c1H/hn is an integer and ch2H - k²hn/2 is an integer.
bool is_lattice_class(const NumericalClass& cls, const Geometry& g);

enum class StandardKind {
  StructureSheafShift,  // O[1]
  TwistedIdeal,         // L ⊗ I_Z with length(Z) = param
  IdealDualShift,       // I_W^∨[1] with length(W) = param
  Thaddeus,             // extension of L by O[1]
  LineBundle,           // O(param·H)
};

struct StandardClass {
  StandardKind kind = StandardKind::StructureSheafShift;
  std::int64_t param = 0;

  static StandardClass o_shift() { return {StandardKind::StructureSheafShift, 0}; }
  static StandardClass l_ideal(std::int64_t d) { return {StandardKind::TwistedIdeal, d}; }
  static StandardClass ideal_dual_shift(std::int64_t d) { return {StandardKind::IdealDualShift, d}; }
  static StandardClass thaddeus() { return {StandardKind::Thaddeus, 0}; }
  static StandardClass line_bundle(std::int64_t k) { return {StandardKind::LineBundle, k}; }

  /// Parses "O_shift", "L_ideal(d)", "ideal_dual_shift(d)", "thaddeus", "line_bundle(k)".
  static StandardClass parse(std::string_view text);
  std::string str() const;
};

/// Numerical class of a named object. Lengths must be nonnegative.
NumericalClass standard_class(const StandardClass& tag, const Geometry& g);

/// Hodge index: c2·hn <= cH².
bool hodge_ok(const DivisorData& dv, const Geometry& g);

}  // namespace tiltstab
