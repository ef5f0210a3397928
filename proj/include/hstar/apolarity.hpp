#pragma once

// Apolarity: T = k[y_0..y_n] acts on S = k[x_0..x_n] by y_j = d/dx_j.
// Perp components come from catalecticant kernels; apolarity of a point set
// is decided by the span form of the Apolarity Lemma (F is a combination of
// d-th powers of the points' linear forms), with no ideal computations.

#include "hstar/field.hpp"
#include "hstar/matrix.hpp"
#include "hstar/polynomial.hpp"
#include "hstar/projective.hpp"
#include "hstar/random.hpp"
#include "hstar/star.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hstar {

/// y^a applied to x^b: prod b_i!/(b_i - a_i)! x^(b - a), or 0 unless a <= b.
inline std::optional<std::pair<Exponent, mpz_class>> differentiate_monomial(const Exponent& op, const Exponent& mono) {
  Exponent out(mono.size());
  mpz_class factor = 1;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (op[i] > mono[i]) return std::nullopt;
    out[i] = mono[i] - op[i];
    for (unsigned k = 0; k < op[i]; ++k) factor *= mono[i] - k;
  }
  return std::make_pair(std::move(out), factor);
}

/// The differentiation action of a form in T on a form in S.
inline HomogeneousForm diff_apply(const HomogeneousForm& op, const HomogeneousForm& f) {
  if (op.ring() != Ring::T || f.ring() != Ring::S)
    throw std::invalid_argument("diff_apply expects an operator in y-variables acting on a form in x-variables");
  if (op.nvars() != f.nvars()) throw std::invalid_argument("operator and form have different variable counts");
  if (op.degree() > f.degree())
    throw std::invalid_argument("operator degree " + std::to_string(op.degree()) + " exceeds form degree " +
                                std::to_string(f.degree()));
  HomogeneousForm out(f.nvars(), f.degree() - op.degree(), Ring::S);
  for (const auto& [a, ca] : op.terms())
    for (const auto& [b, cb] : f.terms())
      if (auto d = differentiate_monomial(a, b)) out.add_term(d->first, ca * cb * Scalar(Rational(d->second)));
  return out;
}

/// Matrix of T_e -> S_{d-e}, g -> g o f, in the monomial bases (columns
/// indexed by monomials(nvars, e), rows by monomials(nvars, d - e)).
inline Matrix<Scalar> catalecticant(const HomogeneousForm& f, unsigned e) {
  if (e > f.degree()) throw std::invalid_argument("catalecticant degree exceeds the form degree");
  const auto ops = monomials(f.nvars(), e);
  const auto targets = monomials(f.nvars(), f.degree() - e);
  Matrix<Scalar> m(targets.size(), ops.size());
  for (std::size_t col = 0; col < ops.size(); ++col)
    for (std::size_t row = 0; row < targets.size(); ++row) {
      Exponent full(f.nvars());
      for (std::size_t i = 0; i < full.size(); ++i) full[i] = targets[row][i] + ops[col][i];
      const Scalar c = f.coefficient(full);
      if (c.is_zero()) continue;
      m(row, col) = c * Scalar(Rational(differentiate_monomial(ops[col], full)->second));
    }
  return m;
}

/// Degree-e piece of the perp ideal of f.
struct PerpComponent {
  unsigned degree = 0;
  std::vector<HomogeneousForm> basis;
};

inline PerpComponent perp_component(const HomogeneousForm& f, unsigned e) {
  if (f.ring() != Ring::S) throw std::invalid_argument("perp ideals are taken of forms in x-variables");
  PerpComponent out{e, {}};
  const auto ops = monomials(f.nvars(), e);
  if (e > f.degree()) {
    for (const auto& m : ops) out.basis.push_back(HomogeneousForm::monomial(m, Scalar(1), Ring::T));
    return out;
  }
  for (const auto& v : kernel_basis(catalecticant(f, e))) {
    HomogeneousForm g(f.nvars(), e, Ring::T);
    for (std::size_t i = 0; i < ops.size(); ++i) g.add_term(ops[i], v[i]);
    out.basis.push_back(std::move(g));
  }
  return out;
}

/// Columns are the coefficient vectors of l_P^d, l_P = p_0 x_0 + ... + p_n x_n.
inline Matrix<Scalar> power_matrix(const std::vector<ProjPoint>& points, unsigned d) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  const std::size_t nvars = points.front().coords().size();
  const std::size_t rows = monomials(nvars, d).size();
  Matrix<Scalar> m(rows, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    require_same_dimension(points.front(), points[j]);
    const Coords col = HomogeneousForm::linear_power(points[j].coords(), d).coefficient_vector();
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = col[i];
  }
  return m;
}

inline void require_distinct(const std::vector<ProjPoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("repeated point " + points[i].str());
}

/// alpha with sum alpha_i l_{P_i}^d = f, free unknowns set to zero; empty when
/// f is outside the span.
inline std::optional<Coords> waring_coefficients(const std::vector<ProjPoint>& points, const HomogeneousForm& f) {
  if (f.ring() != Ring::S) throw std::invalid_argument("Waring decompositions are of forms in x-variables");
  require_distinct(points);
  if (!points.empty() && points.front().coords().size() != f.nvars())
    throw std::invalid_argument("points and form have different variable counts");
  return solve(power_matrix(points, f.degree()), f.coefficient_vector());
}

/// The ideal of the points lies in the perp ideal of f, decided as: f lies in
/// the span of the d-th powers of the points' linear forms.
inline bool is_apolar_points(const std::vector<ProjPoint>& points, const HomogeneousForm& f) {
  return waring_coefficients(points, f).has_value();
}

/// sum alpha_i l_{P_i}^d, for checking a decomposition term by term.
inline HomogeneousForm expand_waring(const std::vector<ProjPoint>& points, const Coords& alpha, unsigned d) {
  if (points.size() != alpha.size()) throw std::invalid_argument("one coefficient per point expected");
  HomogeneousForm out(points.front().coords().size(), d, Ring::S);
  for (std::size_t i = 0; i < points.size(); ++i)
    out += HomogeneousForm::linear_power(points[i].coords(), d) * alpha[i];
  return out;
}

// ---------------------------------------------------------------------------
// The aHSC for M = x0 x1 x2 over Q(sqrt 2641).

/// L_i = a_i y0 + b_i y1 + y2, i = 1..4.
struct NicexPoint {
  std::array<Scalar, 4> a;
  std::array<Scalar, 4> b;

  [[nodiscard]] std::vector<LinearForm> forms() const {
    std::vector<LinearForm> out;
    for (std::size_t i = 0; i < 4; ++i) out.emplace_back(Coords{a[i], b[i], Scalar(1)}, Ring::T);
    return out;
  }
};

inline NicexPoint nicex_reference_point() {
  const Scalar s = Scalar::sqrt_of(2641);
  NicexPoint pt;
  pt.a = {(s + Scalar(119)) / (Scalar(4) * (s + Scalar(47))), Scalar(2) * (-s - Scalar(59)) / (s + Scalar(47)),
          Scalar(2), Scalar(1)};
  pt.b = {Scalar(3) * (-s - Scalar(39)) / Scalar(16), Scalar(5), Scalar(9), (s + Scalar(11)) / Scalar(4)};
  return pt;
}

struct CheckGroup {
  std::string name;
  std::vector<Scalar> values;
  bool passed = false;
};

struct NicexReport {
  std::vector<CheckGroup> groups;
  [[nodiscard]] bool all_passed() const {
    for (const auto& g : groups)
      if (!g.passed) return false;
    return !groups.empty();
  }
};

/// Evaluates every condition on (a_i, b_i): the four apolarity equations,
/// the four maximal minors of the coefficient matrix (nonzero), the four
/// reciprocal minors (zero), the HSC verdict, and apolarity of the six
/// intersection points to x0 x1 x2.
inline NicexReport verify_nicex(const NicexPoint& pt = nicex_reference_point()) {
  NicexReport report;
  const auto& a = pt.a;
  const auto& b = pt.b;
  // Zero-based indices of the equations, printed 1-based in the check names.
  const auto apolar_eq = [&](std::size_t i, std::size_t j, std::size_t k) {
    return b[j] * a[k] + b[i] * a[k] + a[j] * b[k] + a[i] * b[k] + b[i] * a[j] + a[i] * b[j];
  };
  const auto minor = [&](std::size_t i, std::size_t j, std::size_t k) {
    return -a[j] * b[i] + a[k] * b[i] + a[i] * b[j] - a[k] * b[j] - a[i] * b[k] + a[j] * b[k];
  };
  const auto inv_ab = [&](std::size_t i, std::size_t j) { return (a[i] * b[j]).inverse(); };
  const auto reciprocal_minor = [&](std::size_t i, std::size_t j, std::size_t k) {
    return inv_ab(i, j) + inv_ab(k, i) + inv_ab(j, k) - inv_ab(k, j) - inv_ab(j, i) - inv_ab(i, k);
  };
  const std::array<std::array<std::size_t, 3>, 4> triples{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

  const auto nonzero_inputs = [&] {
    for (std::size_t i = 0; i < 4; ++i)
      if (a[i].is_zero() || b[i].is_zero()) return false;
    return true;
  }();

  CheckGroup eqs{"apolarity equations vanish", {}, true};
  // Equation k involves every form except L_k.
  for (std::size_t omit = 0; omit < 4; ++omit) {
    std::array<std::size_t, 3> t{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != omit) t[n++] = i;
    eqs.values.push_back(apolar_eq(t[0], t[1], t[2]));
    eqs.passed = eqs.passed && eqs.values.back().is_zero();
  }
  report.groups.push_back(std::move(eqs));

  CheckGroup minors{"coefficient minors nonzero", {}, true};
  for (const auto& t : triples) {
    minors.values.push_back(minor(t[0], t[1], t[2]));
    minors.passed = minors.passed && !minors.values.back().is_zero();
  }
  report.groups.push_back(std::move(minors));

  CheckGroup recip{"reciprocal minors vanish", {}, nonzero_inputs};
  if (nonzero_inputs)
    for (const auto& t : triples) {
      recip.values.push_back(reciprocal_minor(t[0], t[1], t[2]));
      recip.passed = recip.passed && recip.values.back().is_zero();
    }
  report.groups.push_back(std::move(recip));

  const auto forms = pt.forms();
  const Classification cls = classify(forms);
  report.groups.push_back({"classifies as HSC", {}, cls.verdict == Verdict::HSC});

  bool apolar = false;
  if (cls.at_least(Verdict::StarConfig)) {
    const HomogeneousForm m = HomogeneousForm::monomial({1, 1, 1});
    apolar = is_apolar_points(build_star_config(forms, 2).points(), m);
  }
  report.groups.push_back({"star configuration apolar to x0*x1*x2", {}, apolar});
  return report;
}

// ---------------------------------------------------------------------------
// Randomized search for an HSC apolar to a form.

/// Exceptional (d, r, n) below r = d + n, kept as reference data; the family
/// (d, d+1, 2) is open-ended and not listed.
inline constexpr std::array<std::array<unsigned, 3>, 5> kExceptionalTriples{
    {{3, 5, 3}, {4, 6, 3}, {5, 7, 3}, {3, 6, 4}, {3, 7, 5}}};

struct ApolarHsc {
  StarConfig config;
  LinearForm hyperplane;
  std::vector<ProjPoint> factor_points;
  Coords waring;
  std::size_t attempts_used = 0;
};

/// Samples a full-support hyperplane h (integer coefficients in [-100, 100])
/// and r points on h with nonzero coordinates, forms L_i = P_i * h in the
/// dual ring, and returns the first codimension-n configuration that is an
/// HSC and apolar to f. Each sampled configuration costs one attempt.
inline std::optional<ApolarHsc> random_apolar_hsc(const HomogeneousForm& f, std::size_t r, std::size_t attempts,
                                                  std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("need at least one hyperplane");
  if (f.ring() != Ring::S) throw std::invalid_argument("search needs a form in x-variables");
  if (f.nvars() < 2) throw std::invalid_argument("search needs at least two variables");
  const std::size_t n = f.nvars() - 1;
  constexpr std::int64_t kBound = 100;
  Sampler rng(seed);
  for (std::size_t attempt = 1; attempt <= attempts; ++attempt) {
    const LinearForm h = rng.full_support_form(n, kBound, Ring::T);
    std::vector<ProjPoint> points;
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < r; ++i) {
      points.push_back(rng.nonzero_point_on(h, kBound));
      forms.push_back(hadamard(points.back(), h));
    }
    if (r < n) continue;
    if (classify(forms).verdict != Verdict::HSC) continue;
    StarConfig config = build_star_config(forms, n);
    auto alpha = waring_coefficients(config.points(), f);
    if (!alpha) continue;
    return ApolarHsc{std::move(config), h, std::move(points), std::move(*alpha), attempt};
  }
  return std::nullopt;
}

}  // namespace hstar
