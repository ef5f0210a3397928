#pragma once

// Seeded sampling of integers, rationals and points. Uses the raw 64-bit
// Mersenne Twister output with rejection, so streams are identical across
// standard library implementations.

#include "hstar/field.hpp"
#include "hstar/projective.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace hstar {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform nonzero integer in [-bound, bound].
  std::int64_t nonzero(std::int64_t bound) {
    while (true)
      if (const auto v = uniform(-bound, bound); v != 0) return v;
  }

  /// p/q with p in [-bound, bound] and q in [1, max_den].
  Rational rational(std::int64_t bound, std::int64_t max_den = 1) {
    return Rational(static_cast<long>(uniform(-bound, bound)), static_cast<long>(uniform(1, max_den)));
  }

  Rational nonzero_rational(std::int64_t bound, std::int64_t max_den = 1) {
    return Rational(static_cast<long>(nonzero(bound)), static_cast<long>(uniform(1, max_den)));
  }

  /// Point of P^n whose coordinates are nonzero integers in [-bound, bound].
  ProjPoint nonzero_point(std::size_t n, std::int64_t bound) {
    Coords c;
    for (std::size_t i = 0; i <= n; ++i) c.emplace_back(Rational(static_cast<long>(nonzero(bound))));
    return ProjPoint(std::move(c));
  }

  /// Full-support linear form with nonzero integer coefficients in [-bound, bound].
  LinearForm full_support_form(std::size_t n, std::int64_t bound, Ring ring = Ring::S) {
    Coords c;
    for (std::size_t i = 0; i <= n; ++i) c.emplace_back(Rational(static_cast<long>(nonzero(bound))));
    return LinearForm(std::move(c), ring);
  }

  /// Point on V(h) with every coordinate nonzero: the first n coordinates are
  /// drawn, the last solved as p_n = -(a_0 p_0 + ... + a_{n-1} p_{n-1}) / a_n.
  /// Requires a_n != 0.
  ProjPoint nonzero_point_on(const LinearForm& h, std::int64_t bound) {
    const std::size_t n = h.dimension();
    if (h[n].is_zero()) throw std::invalid_argument("last coefficient of the hyperplane must be nonzero");
    while (true) {
      Coords c;
      Scalar acc;
      for (std::size_t i = 0; i < n; ++i) {
        c.emplace_back(Rational(static_cast<long>(nonzero(bound))));
        acc += h[i] * c.back();
      }
      c.push_back(-acc / h[n]);
      if (!c.back().is_zero()) return ProjPoint(std::move(c));
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace hstar
