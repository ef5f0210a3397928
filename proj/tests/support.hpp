#pragma once

// Test-side oracles and instance generators. The oracles work on raw
// mpq_class or on definitions, never through the library routine they check.

#include "hstar/hstar.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace hstar::testing {

/// Leibniz formula over Q: sum over permutations of sign * product.
inline mpq_class leibniz_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpq_class term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank over Q by plain Gaussian elimination on mpq_class.
inline std::size_t oracle_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<mpq_class>> to_mpq(const Matrix<Scalar>& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).as_rational().gmp();
  return out;
}

inline Matrix<Scalar> random_matrix(Sampler& rng, std::size_t rows, std::size_t cols, std::int64_t bound,
                                    std::int64_t max_den = 1) {
  Matrix<Scalar> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(bound, max_den);
  return m;
}

inline ProjPoint random_point(Sampler& rng, std::size_t n, std::int64_t bound, std::int64_t max_den = 1) {
  while (true) {
    Coords c;
    for (std::size_t i = 0; i <= n; ++i) c.emplace_back(rng.rational(bound, max_den));
    if (!detail::all_zero(c)) return ProjPoint(std::move(c));
  }
}

inline ProjPoint random_nonzero_point(Sampler& rng, std::size_t n, std::int64_t bound, std::int64_t max_den = 1) {
  Coords c;
  for (std::size_t i = 0; i <= n; ++i) c.emplace_back(rng.nonzero_rational(bound, max_den));
  return ProjPoint(std::move(c));
}

inline HomogeneousForm random_form(Sampler& rng, std::size_t nvars, unsigned degree, std::int64_t bound) {
  HomogeneousForm f(nvars, degree);
  for (const auto& e : monomials(nvars, degree)) f.add_term(e, rng.rational(bound));
  if (f.is_zero()) f.add_term(monomials(nvars, degree).front(), Scalar(1));
  return f;
}

/// Hyperplanes through the origin of k^{n+1} containing the given vectors.
inline Coords plane_through(const std::vector<Coords>& rows) {
  const auto ker = kernel_basis(coordinate_matrix(rows));
  return ker.empty() ? Coords{} : ker.front();
}

/// A Hadamard family input whose Cremona images are not in general position:
/// four points on a plane h of P^3 with coplanar Cremona images, plus
/// `extra` random points on h. Built as follows. Three random points Q_1..Q_3
/// of a random plane g fix h through their Cremona images; the cubic
/// {Q in g : sigma(Q) in h} meets the line Q_1 Q_2 in a third rational point.
struct PlantedFamily {
  LinearForm hyperplane;
  std::vector<ProjPoint> points;
};

inline std::optional<PlantedFamily> plant_coplanar_images(Sampler& rng, std::size_t extra) {
  const std::size_t n = 3;
  const LinearForm g = rng.full_support_form(n, 20);
  std::vector<ProjPoint> qs;
  for (int i = 0; i < 3; ++i) qs.push_back(rng.nonzero_point_on(g, 20));
  std::vector<Coords> images;
  for (const auto& q : qs) images.push_back(cremona(q).coords());
  const Coords hc = plane_through(images);
  if (hc.empty()) return std::nullopt;
  const LinearForm h(hc);
  if (!h.full_support()) return std::nullopt;
  // F(Q) = sum_j h_j prod_{k != j} Q_k vanishes exactly where sigma(Q) lies on h.
  const auto cubic = [&](const Coords& x) {
    Scalar total;
    for (std::size_t j = 0; j <= n; ++j) {
      Scalar t = h[j];
      for (std::size_t k = 0; k <= n; ++k)
        if (k != j) t *= x[k];
      total += t;
    }
    return total;
  };
  const auto along = [&](const Scalar& s, const Scalar& t) {
    Coords x;
    for (std::size_t k = 0; k <= n; ++k) x.push_back(s * qs[0][k] + t * qs[1][k]);
    return x;
  };
  // G(s, t) = F(s Q_1 + t Q_2) = s t (alpha s + beta t).
  const Scalar g_plus = cubic(along(Scalar(1), Scalar(1)));
  const Scalar g_minus = cubic(along(Scalar(1), Scalar(-1)));
  const Scalar alpha = (g_plus - g_minus) / Scalar(2);
  const Scalar beta = (g_plus + g_minus) / Scalar(2);
  if (alpha.is_zero() || beta.is_zero()) return std::nullopt;
  const Coords fourth = along(-beta, alpha);
  if (detail::all_zero(fourth)) return std::nullopt;
  qs.emplace_back(fourth);
  PlantedFamily out{h, {}};
  for (const auto& q : qs) {
    if (!q.all_nonzero()) return std::nullopt;
    out.points.push_back(cremona(q));
  }
  for (std::size_t i = 0; i < out.points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out.points[i] == out.points[j]) return std::nullopt;
  for (std::size_t i = 0; i < extra; ++i) out.points.push_back(rng.nonzero_point_on(h, 20));
  return out;
}

/// A line pq of P^n missing Delta_{n-2}, with m distinct points on it, all
/// outside Delta_{n-1}.
struct LineSample {
  ProjPoint p;
  ProjPoint q;
  std::vector<ProjPoint> points;
};

inline LineSample sample_line(Sampler& rng, std::size_t n, std::size_t m, std::int64_t bound = 9) {
  while (true) {
    const ProjPoint p = random_nonzero_point(rng, n, bound);
    const ProjPoint q = random_nonzero_point(rng, n, bound);
    if (p == q || line_meets_codim2_strata(p, q)) continue;
    LineSample s{p, q, {}};
    while (s.points.size() < m) {
      const Scalar a(rng.nonzero(bound));
      const Scalar b(rng.nonzero(bound));
      Coords c;
      for (std::size_t k = 0; k <= n; ++k) c.push_back(a * p[k] + b * q[k]);
      ProjPoint x(std::move(c));
      if (!x.all_nonzero()) continue;
      bool seen = false;
      for (const auto& y : s.points) seen = seen || y == x;
      if (!seen) s.points.push_back(std::move(x));
    }
    return s;
  }
}

/// Conditions on degree-d forms vanishing on the points (ring T, as operators).
inline std::vector<HomogeneousForm> vanishing_forms(const std::vector<ProjPoint>& points, unsigned d) {
  const std::size_t nvars = points.front().coords().size();
  const auto monos = monomials(nvars, d);
  Matrix<Scalar> eval(points.size(), monos.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      Scalar v(1);
      for (std::size_t k = 0; k < nvars; ++k)
        for (unsigned e = 0; e < monos[j][k]; ++e) v *= points[i][k];
      eval(i, j) = v;
    }
  std::vector<HomogeneousForm> out;
  for (const auto& v : kernel_basis(eval)) {
    HomogeneousForm g(nvars, d, Ring::T);
    for (std::size_t j = 0; j < monos.size(); ++j) g.add_term(monos[j], v[j]);
    out.push_back(std::move(g));
  }
  return out;
}

/// Apolarity lemma in top degree: the points are apolar to f iff every
/// degree-d form vanishing on them annihilates f.
inline bool apolar_by_annihilation(const std::vector<ProjPoint>& points, const HomogeneousForm& f) {
  for (const auto& g : vanishing_forms(points, f.degree()))
    if (!diff_apply(g, f).is_zero()) return false;
  return true;
}

}  // namespace hstar::testing
