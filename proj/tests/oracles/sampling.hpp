#pragma once

#include <cstdint>
#include <random>

#include "tiltstab/lattice.hpp"
#include "tiltstab/rational.hpp"
#include "tiltstab/tilt.hpp"

namespace sampling {

using tiltstab::NumericalClass;
using tiltstab::Rational;

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational rational(std::mt19937_64& rng, std::int64_t num_abs, std::int64_t den_max) {
  return Rational(uniform(rng, -num_abs, num_abs), uniform(rng, 1, den_max));
}

/// A rational strictly inside (0, 1) with denominator at most den_max.
inline Rational open_unit(std::mt19937_64& rng, std::int64_t den_max = 12) {
  const std::int64_t q = uniform(rng, 2, den_max);
  return Rational(uniform(rng, 1, q - 1), q);
}

inline NumericalClass any_class(std::mt19937_64& rng) {
  return {uniform(rng, -5, 5), rational(rng, 40, 6), rational(rng, 40, 6)};
}

inline tiltstab::TiltPoint any_point(std::mt19937_64& rng) {
  return tiltstab::TiltPoint::make(rational(rng, 20, 8), Rational(uniform(rng, 1, 30), uniform(rng, 1, 12)));
}

}  // namespace sampling
