#include "tiltstab/walls.hpp"

#include <stdexcept>

#include "tiltstab/errors.hpp"

namespace tiltstab {

namespace {

const Rational kZero(0);

WallPolynomial degree_form(const NumericalClass& cls, const Geometry& g) {
  const Rational half_rank_hn = Rational(cls.r * g.hn) / Rational(2);
  WallPolynomial p;
  p.add_term(0, 0, cls.ch2H);
  p.add_term(1, 0, -cls.c1H);
  p.add_term(2, 0, half_rank_hn);
  p.add_term(0, 1, -half_rank_hn);
  return p;
}

WallPolynomial rank_form(const NumericalClass& cls, const Geometry& g) {
  WallPolynomial p;
  p.add_term(0, 0, cls.c1H);
  p.add_term(1, 0, -Rational(cls.r * g.hn));
  return p;
}

}  // namespace

const Rational& WallPolynomial::coeff(int deg_s, int deg_tau) const {
  const auto it = terms_.find({deg_s, deg_tau});
  return it == terms_.end() ? kZero : it->second;
}

void WallPolynomial::add_term(int deg_s, int deg_tau, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({deg_s, deg_tau}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational WallPolynomial::evaluate(const Rational& s, const Rational& tau) const {
  Rational total(0);
  for (const auto& [mono, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < mono.first; ++i) term *= s;
    for (int j = 0; j < mono.second; ++j) term *= tau;
    total += term;
  }
  return total;
}

bool WallPolynomial::is_zero() const { return terms_.empty(); }

int WallPolynomial::total_degree() const {
  int deg = -1;
  for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.first + mono.second);
  return deg;
}

WallPolynomial operator*(const WallPolynomial& a, const WallPolynomial& b) {
  WallPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  }
  return out;
}

WallPolynomial operator-(const WallPolynomial& a, const WallPolynomial& b) {
  WallPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m.first, m.second, -c);
  return out;
}

WallPolynomial wall_polynomial(const NumericalClass& a, const NumericalClass& b, const Geometry& g) {
  return degree_form(a, g) * rank_form(b, g) - degree_form(b, g) * rank_form(a, g);
}

bool Wall::meets_open_strip() const {
  switch (kind) {
    case Kind::Everywhere: return true;
    case Kind::Empty: return false;
    case Kind::VerticalLine: return Rational(0) < center && center < Rational(1);
    case Kind::Circle: {
      // The open disc meets 0 < s < 1 iff the footprint (c - R, c + R) does.
      // c - R < 1 ⇔ c < 1 or (c - 1)² < R²; c + R > 0 ⇔ c > 0 or c² < R².
      const bool left_ok = center < Rational(1) || square(center - Rational(1)) < radius_sq;
      const bool right_ok = center > Rational(0) || square(center) < radius_sq;
      return left_ok && right_ok;
    }
  }
  return false;
}

std::string to_string(const Wall& w) {
  switch (w.kind) {
    case Wall::Kind::Circle: return "circle(center=" + w.center.str() + ", radius_sq=" + w.radius_sq.str() + ")";
    case Wall::Kind::VerticalLine: return "vertical(s=" + w.center.str() + ")";
    case Wall::Kind::Empty: return "empty";
    case Wall::Kind::Everywhere: return "everywhere";
  }
  return "?";
}

Wall wall(const NumericalClass& a, const NumericalClass& b, const Geometry& g) {
  const WallPolynomial p = wall_polynomial(a, b, g);
  if (p.total_degree() > 2) throw std::logic_error("wall polynomial kept a cubic term");
  const Rational& quad = p.coeff(2, 0);
  if (quad != p.coeff(0, 1)) throw std::logic_error("wall polynomial is not a circle pencil");
  if (!p.coeff(1, 1).is_zero() || !p.coeff(0, 2).is_zero()) {
    throw std::logic_error("wall polynomial has an unexpected mixed term");
  }
  const Rational& lin = p.coeff(1, 0);
  const Rational& cst = p.coeff(0, 0);

  if (!quad.is_zero()) {
    // quad·(s² + τ) + lin·s + cst = 0  ⇔  (s - c)² + τ = c² - cst/quad.
    const Rational center = -lin / (Rational(2) * quad);
    const Rational radius_sq = center * center - cst / quad;
    if (radius_sq.sign() <= 0) return Wall::empty();
    return Wall::circle(center, radius_sq);
  }
  if (!lin.is_zero()) return Wall::vertical(-cst / lin);
  return cst.is_zero() ? Wall::everywhere() : Wall::empty();
}

const char* to_string(WallSide side) {
  switch (side) {
    case WallSide::Above: return "Above";
    case WallSide::On: return "On";
    case WallSide::Below: return "Below";
    case WallSide::Undefined: return "Undefined";
  }
  return "?";
}

WallSide side(const NumericalClass& a, const NumericalClass& b, const TiltPoint& pt, const Geometry& g) {
  switch (slope_cmp(a, b, pt, g)) {
    case SlopeOrder::Greater:
    case SlopeOrder::LeftMaximalPhase: return WallSide::Above;
    case SlopeOrder::Equal: return WallSide::On;
    case SlopeOrder::Less:
    case SlopeOrder::RightMaximalPhase: return WallSide::Below;
    default: return WallSide::Undefined;
  }
}

bool in_circle(const TiltPoint& pt, const Wall& circle) {
  if (circle.kind != Wall::Kind::Circle) throw PreconditionViolated("in_circle needs a circular wall");
  return square(pt.s - circle.center) + pt.tau < circle.radius_sq;
}

bool kodaira_region(const TiltPoint& pt) {
  return square(pt.s - Rational(1, 2)) + pt.tau < Rational(1, 4);
}

std::vector<LadderRow> thaddeus_ladder(const Geometry& g, std::int64_t d_max) {
  if (d_max < 0) throw PreconditionViolated("ladder needs d_max >= 0");
  std::vector<LadderRow> rows;
  rows.reserve(static_cast<std::size_t>(d_max) + 1);
  for (std::int64_t d = 0; d <= d_max; ++d) {
    LadderRow row;
    row.d = d;
    row.radius_sq = Rational(1, 4) - Rational(2 * d, g.hn);
    row.exists = row.radius_sq.sign() > 0;
    row.rank1_wall = row.exists;
    row.above_one_sixth = row.radius_sq > Rational(1, 36);
    if (d == 0) {
      row.flip_label = "Simpson wall, removes P(H0(S,L))";
    } else {
      row.flip_label = "P(H0(L⊗I_W⊗I_Z)) <-> dual";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tiltstab
