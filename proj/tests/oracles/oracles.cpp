#include "oracles.hpp"

#include <algorithm>

namespace oracle {

mpq_class rank_s(const Cls& v, const Pt& p, std::int64_t hn) {
  return v.c - p.s * v.r * mpq_class(hn);
}

mpq_class degree(const Cls& v, const Pt& p, std::int64_t hn) {
  mpq_class out = v.x - p.s * v.c + (p.s * p.s - p.tau) * v.r * mpq_class(hn) / 2;
  out.canonicalize();
  return out;
}

namespace {

mpq_class frac(std::int64_t num, std::int64_t den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

Cls make(std::int64_t r, std::int64_t k, std::int64_t c2, std::int64_t hn) {
  const mpq_class K(k), H(hn);
  return {mpq_class(r), K * H, K * K * H / 2 - c2};
}

bool under_cap(const Cls& v, std::int64_t hn) {
  if (v.r == 0) return true;
  // For negative rank the sheaf is the shift, whose cap is the same quadratic form.
  const mpq_class sign = v.r > 0 ? 1 : -1;
  return sign * v.x <= v.c * v.c / (2 * sign * v.r * hn);
}

bool in_heart(const Cls& v, const Pt& p, std::int64_t hn) {
  const mpq_class rs = rank_s(v, p, hn);
  if (rs < 0) return false;
  if (rs == 0) return degree(v, p, hn) > 0;
  return true;
}

}  // namespace

std::vector<BoxHit> thaddeus_box(std::int64_t hn, const mpq_class& tau, std::int64_t c2_abs) {
  const Pt p{mpq_class(1, 2), tau};
  const Cls target{0, mpq_class(hn), frac(hn, 2)};
  std::vector<BoxHit> hits;
  for (std::int64_t r = -6; r <= 6; ++r) {
    if (r < 1) continue;
    if (4 * r * r * tau > 1) continue;
    for (std::int64_t k = -6; k <= 6; ++k) {
      for (std::int64_t c2 = -c2_abs; c2 <= c2_abs; ++c2) {
        const Cls w = make(r, k, c2, hn);
        const Cls q{target.r - w.r, target.c - w.c, target.x - w.x};
        if (!under_cap(w, hn) || !under_cap(q, hn)) continue;
        if (!in_heart(w, p, hn) || !in_heart(q, p, hn)) continue;
        const mpq_class rw = rank_s(w, p, hn);
        const mpq_class dw = degree(w, p, hn);
        // The target has degree 0 at s = 1/2, so slope >= slope(target) means d_w >= 0.
        if (dw < 0) continue;
        hits.push_back({{r, k, c2}, rw != 0 && dw == 0, rw == 0});
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const BoxHit& a, const BoxHit& b) { return a.key < b.key; });
  return hits;
}

std::vector<std::pair<std::int64_t, std::int64_t>> obstruction_box(std::int64_t hn, std::int64_t d) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t cH = 1; 2 * cH <= hn; ++cH) {
    for (std::int64_t c2 = -(hn + d); c2 <= hn + d; ++c2) {
      if (cH > c2 + d) continue;
      if (c2 * hn > cH * cH) continue;
      if (hn > 4 * d && c2 >= d) continue;
      if (hn > (d + 1) * (d + 1) && c2 > 0) continue;
      out.emplace_back(cH, c2);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

Cls twist_series(const Cls& v, std::int64_t m, std::int64_t hn) {
  // Graded pieces: degree 0 is a number, degree 1 a multiple of H is recorded
  // by its H-degree, degree 2 by its H²-degree.
  const mpq_class H(hn);
  mpq_class e[3];
  mpq_class term = 1;
  for (int j = 0; j <= 2; ++j) {
    // (mH)^j / j!, contracted against H^{2-j}: coefficient m^j/j!, degree j.
    e[j] = term;
    term = term * m / (j + 1);
  }
  // e = (1, m, m²/2) in units of (1, H, H²); contract with H.
  Cls out;
  out.r = v.r * e[0];
  out.c = v.c * e[0] + v.r * e[1] * H;
  out.x = v.x * e[0] + v.c * e[1] + v.r * e[2] * H;
  return out;
}

std::pair<mpq_class, mpq_class> charge_at_rational_t(const Cls& v, const mpq_class& s, const mpq_class& t,
                                                     std::int64_t hn) {
  // x = s + it; x² = s² - t² + 2ist.
  const mpq_class H(hn);
  const mpq_class x2_re = s * s - t * t;
  const mpq_class x2_im = 2 * s * t;
  // ∫ e^{-xH} ch = ch2 - x·c1 + (x²/2)·r·H².
  const mpq_class re = v.x - s * v.c + x2_re / 2 * v.r * H;
  const mpq_class im = -t * v.c + x2_im / 2 * v.r * H;
  return {-re, -im};
}

mpq_class dual_ideal_slope_times_t(const mpq_class& s, const mpq_class& tau, std::int64_t d, std::int64_t hn) {
  mpq_class out = (tau - s * s + frac(2 * d, hn)) / (2 * s);
  out.canonicalize();
  return out;
}

int cross_sign(const Cls& a, const Cls& b, const Pt& p, std::int64_t hn) {
  const mpq_class v = degree(a, p, hn) * rank_s(b, p, hn) - degree(b, p, hn) * rank_s(a, p, hn);
  return sgn(v);
}

}  // namespace oracle
