#include "tiltstab/lattice.hpp"

#include <ostream>
#include <vector>

#include "tiltstab/errors.hpp"

namespace tiltstab {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  const Rational q = Rational::parse(s);
  if (!q.is_integer()) {
    throw ParseError("expected an integer in '" + std::string(context) + "'");
  }
  return q.floor();
}

}  // namespace

Geometry Geometry::make(std::int64_t hn, int dim, bool pic_rank_one) {
  if (hn < 1) throw PreconditionViolated("H^n must be a positive integer, got " + std::to_string(hn));
  if (dim != 2 && dim != 3) throw PreconditionViolated("dimension must be 2 or 3, got " + std::to_string(dim));
  return Geometry{hn, dim, pic_rank_one};
}

NumericalClass NumericalClass::parse(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw ParseError("class must have the form r,c1H,ch2H: '" + std::string(text) + "'");
  }
  return {parse_int(parts[0], text), Rational::parse(parts[1]), Rational::parse(parts[2])};
}

std::string NumericalClass::str() const {
  return std::to_string(r) + "," + c1H.str() + "," + ch2H.str();
}

NumericalClass& NumericalClass::operator+=(const NumericalClass& o) {
  r += o.r;
  c1H += o.c1H;
  ch2H += o.ch2H;
  return *this;
}

NumericalClass& NumericalClass::operator-=(const NumericalClass& o) {
  r -= o.r;
  c1H -= o.c1H;
  ch2H -= o.ch2H;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const NumericalClass& cls) {
  return os << "(" << cls.str() << ")";
}

Rational mumford_slope(const NumericalClass& cls, const Geometry& g) {
  if (cls.r == 0) throw ZeroRankError("Mumford slope of a rank-zero class is undefined");
  return cls.c1H / Rational(cls.r * g.hn);
}

NumericalClass shift1(const NumericalClass& cls) { return -cls; }

NumericalClass twist(const NumericalClass& cls, std::int64_t m, const Geometry& g) {
  if (!g.pic_rank_one) throw RequiresPicardRankOne("twist by O(mH) needs Pic = ZH");
  const Rational mq(m);
  const Rational rank_hn(cls.r * g.hn);
  return {cls.r,
          cls.c1H + mq * rank_hn,
          cls.ch2H + mq * cls.c1H + mq * mq * rank_hn / Rational(2)};
}

bool is_lattice_class(const NumericalClass& cls, const Geometry& g) {
  const Rational k = cls.c1H / Rational(g.hn);
  if (!k.is_integer()) return false;
  return (cls.ch2H - k * k * Rational(g.hn) / Rational(2)).is_integer();
}

StandardClass StandardClass::parse(std::string_view text) {
  const auto open = text.find('(');
  const std::string_view name = text.substr(0, open);
  std::int64_t param = 0;
  if (open != std::string_view::npos) {
    if (text.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    param = parse_int(text.substr(open + 1, text.size() - open - 2), text);
  }
  const bool has_param = open != std::string_view::npos;
  if (name == "O_shift" && !has_param) return o_shift();
  if (name == "thaddeus" && !has_param) return thaddeus();
  if (name == "L_ideal" && has_param) return l_ideal(param);
  if (name == "ideal_dual_shift" && has_param) return ideal_dual_shift(param);
  if (name == "line_bundle" && has_param) return line_bundle(param);
  throw ParseError("unknown standard class '" + std::string(text) + "'");
}

std::string StandardClass::str() const {
  switch (kind) {
    case StandardKind::StructureSheafShift: return "O_shift";
    case StandardKind::TwistedIdeal: return "L_ideal(" + std::to_string(param) + ")";
    case StandardKind::IdealDualShift: return "ideal_dual_shift(" + std::to_string(param) + ")";
    case StandardKind::Thaddeus: return "thaddeus";
    case StandardKind::LineBundle: return "line_bundle(" + std::to_string(param) + ")";
  }
  return "?";
}

NumericalClass standard_class(const StandardClass& tag, const Geometry& g) {
  const Rational hn(g.hn);
  const Rational half_hn = hn / Rational(2);
  switch (tag.kind) {
    case StandardKind::StructureSheafShift:
      return {-1, 0, 0};
    case StandardKind::TwistedIdeal:
      if (tag.param < 0) throw PreconditionViolated("subscheme length must be nonnegative");
      return {1, hn, half_hn - Rational(tag.param)};
    case StandardKind::IdealDualShift:
      if (tag.param < 0) throw PreconditionViolated("subscheme length must be nonnegative");
      return {-1, 0, Rational(tag.param)};
    case StandardKind::Thaddeus:
      return {0, hn, half_hn};
    case StandardKind::LineBundle: {
      const Rational k(tag.param);
      return {1, k * hn, k * k * half_hn};
    }
  }
  return {};
}

bool hodge_ok(const DivisorData& dv, const Geometry& g) {
  return Rational(dv.c2) * Rational(g.hn) <= Rational(dv.cH) * Rational(dv.cH);
}

}  // namespace tiltstab
