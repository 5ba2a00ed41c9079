#include "tiltstab/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "tiltstab/errors.hpp"

namespace tiltstab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("rational rounds outside the int64 range");
  return z.get_si();
}

}  // namespace

const char* family_name(ErrorFamily family) noexcept {
  switch (family) {
    case ErrorFamily::Parse: return "ParseError";
    case ErrorFamily::ZeroRank: return "ZeroRank";
    case ErrorFamily::RequiresPicardRankOne: return "RequiresPicardRankOne";
    case ErrorFamily::PreconditionViolated: return "PreconditionViolated";
    case ErrorFamily::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorFamily::InfiniteFamily: return "InfiniteFamily";
  }
  return "Error";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class v) {
  Rational q;
  q.v_ = std::move(v);
  q.v_.canonicalize();
  return q;
}

Rational Rational::parse(std::string_view text) {
  const std::string s = trimmed(text);
  const auto slash = s.find('/');
  const std::string num = trimmed(std::string_view(s).substr(0, slash));
  const std::string den =
      slash == std::string::npos ? std::string("1") : trimmed(std::string_view(s).substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return from_mpq(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::int64_t Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_int64(q);
}

std::int64_t Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_int64(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace tiltstab
