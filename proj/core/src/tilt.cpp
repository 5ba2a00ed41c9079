#include "tiltstab/tilt.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "tiltstab/errors.hpp"

namespace tiltstab {

namespace {

const Rational kHalf(1, 2);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational scaled(const Rational& q) const { return {re * q, im * q}; }
};

// Polynomial in t with Q(i) coefficients, lowest degree first.
using TPoly = std::vector<GaussianRational>;

TPoly add(const TPoly& a, const TPoly& b) {
  TPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = out[i] + a[i];
    if (i < b.size()) out[i] = out[i] + b[i];
  }
  return out;
}

TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

TPoly scale(const TPoly& a, const Rational& q) {
  TPoly out = a;
  for (auto& c : out) c = c.scaled(q);
  return out;
}

}  // namespace

TiltPoint TiltPoint::make(Rational s, Rational tau) {
  if (tau.sign() <= 0) throw PreconditionViolated("tilt point needs t^2 > 0, got " + tau.str());
  return TiltPoint{std::move(s), std::move(tau)};
}

TiltPoint TiltPoint::from_t(Rational s, const Rational& t) {
  if (t.sign() <= 0) throw PreconditionViolated("tilt point needs t > 0, got " + t.str());
  return make(std::move(s), t * t);
}

TiltPoint TiltPoint::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("tilt point must have the form s,t2: '" + std::string(text) + "'");
  }
  Rational s = Rational::parse(text.substr(0, comma));
  Rational tau = Rational::parse(text.substr(comma + 1));
  if (tau.sign() <= 0) throw ParseError("t^2 must be positive in '" + std::string(text) + "'");
  return TiltPoint{std::move(s), std::move(tau)};
}

std::string TiltPoint::str() const { return s.str() + "," + tau.str(); }

Rational rank_s(const NumericalClass& cls, const Rational& s, const Geometry& g) {
  return cls.c1H - s * Rational(cls.r * g.hn);
}

Rational deg_st(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g) {
  return cls.ch2H - pt.s * cls.c1H + (pt.s * pt.s - pt.tau) * kHalf * Rational(cls.r * g.hn);
}

CentralCharge central_charge(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g) {
  return {-deg_st(cls, pt, g), rank_s(cls, pt.s, g)};
}

bool verify_compact_form(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g) {
  // x = s + it as a polynomial in t.
  const TPoly x{{pt.s, Rational(0)}, {Rational(0), Rational(1)}};
  // Coefficients of H^0, H^1, H^2 in e^{-xH}.
  const std::array<TPoly, 3> exp_terms{TPoly{{Rational(1), Rational(0)}}, scale(x, Rational(-1)),
                                       scale(mul(x, x), kHalf)};
  // ∫ H^j · ch_{2-j}(E) · H^{n-2} in contracted form.
  const std::array<Rational, 3> pairing{cls.ch2H, cls.c1H, Rational(cls.r * g.hn)};

  TPoly integral;
  for (std::size_t j = 0; j < exp_terms.size(); ++j) integral = add(integral, scale(exp_terms[j], pairing[j]));
  integral = scale(integral, Rational(-1));

  // Reduce t^k = τ^{k/2}·t^{k mod 2} to the basis {1, t}.
  GaussianRational constant{Rational(0), Rational(0)};
  GaussianRational linear{Rational(0), Rational(0)};
  Rational tau_power(1);
  for (std::size_t k = 0; k < integral.size(); ++k) {
    if (k >= 2 && k % 2 == 0) tau_power *= pt.tau;
    if (k % 2 == 0) {
      constant = constant + integral[k].scaled(tau_power);
    } else {
      linear = linear + integral[k].scaled(tau_power);
    }
  }

  const CentralCharge z = central_charge(cls, pt, g);
  return constant.re == z.re && constant.im.is_zero() && linear.re.is_zero() &&
         linear.im == z.im_over_t;
}

std::optional<Rational> ProjectiveSlope::display() const {
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

ProjectiveSlope slope_frac(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g) {
  return {deg_st(cls, pt, g), rank_s(cls, pt.s, g)};
}

const char* to_string(SlopeOrder order) {
  switch (order) {
    case SlopeOrder::Less: return "Less";
    case SlopeOrder::Equal: return "Equal";
    case SlopeOrder::Greater: return "Greater";
    case SlopeOrder::LeftMaximalPhase: return "MaximalPhase(left)";
    case SlopeOrder::RightMaximalPhase: return "MaximalPhase(right)";
    case SlopeOrder::LeftZeroCharge: return "ZeroCharge(left)";
    case SlopeOrder::RightZeroCharge: return "ZeroCharge(right)";
    case SlopeOrder::BothZeroCharge: return "ZeroCharge(both)";
  }
  return "?";
}

SlopeOrder compare_slopes(const ProjectiveSlope& a, const ProjectiveSlope& b) {
  if (a.zero_charge() && b.zero_charge()) return SlopeOrder::BothZeroCharge;
  if (a.zero_charge()) return SlopeOrder::LeftZeroCharge;
  if (b.zero_charge()) return SlopeOrder::RightZeroCharge;

  const bool a_max = a.maximal_phase();
  const bool b_max = b.maximal_phase();
  if (a_max && b_max) return SlopeOrder::Equal;
  if (a_max) return SlopeOrder::LeftMaximalPhase;
  if (b_max) return SlopeOrder::RightMaximalPhase;

  // Remaining den = 0 cases have num < 0: real positive Z, slope -infinity.
  const bool a_min = a.den.is_zero();
  const bool b_min = b.den.is_zero();
  if (a_min && b_min) return SlopeOrder::Equal;
  if (a_min) return SlopeOrder::Less;
  if (b_min) return SlopeOrder::Greater;

  const auto c = (a.num / a.den) <=> (b.num / b.den);
  if (c < 0) return SlopeOrder::Less;
  if (c > 0) return SlopeOrder::Greater;
  return SlopeOrder::Equal;
}

SlopeOrder slope_cmp(const NumericalClass& a, const NumericalClass& b, const TiltPoint& pt,
                     const Geometry& g) {
  return compare_slopes(slope_frac(a, pt, g), slope_frac(b, pt, g));
}

bool sub_window_L(const NumericalClass& cls, const Rational& s, const Geometry& g) {
  if (cls.r < 1) throw ZeroRankError("sub-object window needs rank >= 1, got " + std::to_string(cls.r));
  const Rational mu = mumford_slope(cls, g);
  return s < mu && mu <= s + (Rational(1) - s) / Rational(cls.r);
}

bool quot_window_O(const NumericalClass& cls, const Rational& s, const Geometry& g) {
  if (cls.r < 1) throw ZeroRankError("quotient window needs rank >= 1, got " + std::to_string(cls.r));
  const Rational mu = mumford_slope(cls, g);
  return s * (Rational(1) - Rational(1, cls.r)) < mu && mu <= s;
}

bool on_heart_boundary(const NumericalClass& cls, const Rational& s, const Geometry& g) {
  return cls.r != 0 && mumford_slope(cls, g) == s;
}

Rational positivity_margin(const NumericalClass& cls, const TiltPoint& pt, const Geometry& g) {
  if (!rank_s(cls, pt.s, g).is_zero()) {
    throw PreconditionViolated("positivity margin needs r_s = 0 for " + cls.str());
  }
  const Rational degree = deg_st(cls, pt, g);
  if (cls.r == 0) {
    if (!cls.c1H.is_zero() || cls.ch2H.sign() < 0) {
      throw PreconditionViolated("rank-zero class must be a codim-2 torsion class: " + cls.str());
    }
    if (degree != cls.ch2H) throw std::logic_error("torsion degree identity failed");
    return degree;
  }
  if (cls.r > 0) {
    throw PreconditionViolated("a positive-rank sheaf with Mumford slope s is not in the tilted heart: " +
                               cls.str());
  }

  const NumericalClass sheaf = shift1(cls);
  const Rational rank_hn(sheaf.r * g.hn);
  const Rational cap = sheaf.c1H * sheaf.c1H / (Rational(2) * rank_hn);
  if (sheaf.ch2H > cap) {
    throw PreconditionViolated("shifted sheaf violates the Bogomolov cap: " + cls.str());
  }
  // (c1 - s·r·H)·H = 0 for the sheaf part, so its contracted square vanishes.
  const Rational slack = cap - sheaf.ch2H;
  const Rational closed_form = pt.tau * kHalf * rank_hn + slack;
  if (closed_form != degree) throw std::logic_error("positivity decomposition failed for " + cls.str());
  return degree;
}

}  // namespace tiltstab
