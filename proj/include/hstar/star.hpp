#pragma once

// Star configurations of generally linear forms and their classification as
// weak Hadamard (WHSC) or Hadamard (HSC) star configurations.

#include "hstar/field.hpp"
#include "hstar/matrix.hpp"
#include "hstar/projective.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hstar {

inline void require_common_dimension(const std::vector<LinearForm>& forms) {
  for (const auto& f : forms)
    if (f.dimension() != forms.front().dimension())
      throw std::invalid_argument("linear forms live in different projective spaces");
}

inline Matrix<Scalar> coefficient_matrix(const std::vector<LinearForm>& forms) {
  std::vector<Coords> rows;
  rows.reserve(forms.size());
  for (const auto& f : forms) rows.push_back(f.coeffs());
  return coordinate_matrix(rows);
}

/// Every min(r, n+1) of the coefficient vectors are linearly independent.
/// This covers both conditions at once: any t <= n forms cut a codimension-t
/// flat, and no n+1 of them share a zero.
inline bool generally_linear(const std::vector<LinearForm>& forms) {
  if (forms.empty()) return false;
  require_common_dimension(forms);
  return rows_in_general_position(coefficient_matrix(forms));
}

/// V(L_{i_1}, ..., L_{i_c}) for one c-subset of the forms.
struct Flat {
  std::vector<std::size_t> indices;
  /// Spans the flat (as a linear subspace of k^{n+1}).
  std::vector<Coords> basis;
  /// The flat itself when it is a point (c = n).
  std::optional<ProjPoint> point;
};

class StarConfig {
public:
  [[nodiscard]] const std::vector<LinearForm>& forms() const { return forms_; }
  [[nodiscard]] std::size_t codim() const { return codim_; }
  [[nodiscard]] std::size_t dimension() const { return forms_.front().dimension(); }
  [[nodiscard]] const std::vector<Flat>& flats() const { return flats_; }

  /// The points of a codimension-n configuration, in flat order.
  [[nodiscard]] std::vector<ProjPoint> points() const {
    if (codim_ != dimension()) throw std::logic_error("only codimension-n star configurations are point sets");
    std::vector<ProjPoint> out;
    for (const auto& f : flats_) out.push_back(*f.point);
    return out;
  }

private:
  friend StarConfig build_star_config(const std::vector<LinearForm>& forms, std::size_t c);
  StarConfig(std::vector<LinearForm> forms, std::size_t codim) : forms_(std::move(forms)), codim_(codim) {}

  std::vector<LinearForm> forms_;
  std::size_t codim_;
  std::vector<Flat> flats_;
};

/// Raised when a star configuration is requested from forms that are not
/// generally linear.
class NotGenerallyLinear : public std::domain_error {
public:
  NotGenerallyLinear() : std::domain_error("forms are not generally linear") {}
};

inline StarConfig build_star_config(const std::vector<LinearForm>& forms, std::size_t c) {
  if (forms.empty()) throw std::invalid_argument("a star configuration needs at least one form");
  require_common_dimension(forms);
  const std::size_t n = forms.front().dimension();
  if (c < 1 || c > n)
    throw std::invalid_argument("codimension " + std::to_string(c) + " outside [1, " + std::to_string(n) + "]");
  if (forms.size() < c)
    throw std::invalid_argument("need at least " + std::to_string(c) + " forms for codimension " + std::to_string(c));
  if (!generally_linear(forms)) throw NotGenerallyLinear();

  StarConfig config(forms, c);
  const Matrix<Scalar> coeffs = coefficient_matrix(forms);
  std::vector<std::size_t> all_cols(n + 1);
  for (std::size_t j = 0; j <= n; ++j) all_cols[j] = j;
  for_each_subset(forms.size(), c, [&](const std::vector<std::size_t>& idx) {
    Flat flat{idx, kernel_basis(coeffs.submatrix(idx, all_cols)), std::nullopt};
    assert(flat.basis.size() == n + 1 - c);
    if (c == n) flat.point = ProjPoint(flat.basis.front());
    config.flats_.push_back(std::move(flat));
    return true;
  });
  return config;
}

// ---------------------------------------------------------------------------
// Square classes, used to take exact square roots of kernel vectors.

/// Writes q = s^2 * m with m square-free and returns m (m = 1 for squares).
/// Trial division up to 10^5 certifies the result whenever the remaining
/// cofactor is below 10^15 or a perfect square; otherwise returns nothing.
inline std::optional<long> square_class(const Rational& q) {
  if (q.is_zero()) return std::nullopt;
  mpz_class rest = abs(q.numerator() * q.denominator());
  mpz_class m = 1;
  constexpr unsigned long kBound = 100000;
  for (unsigned long p = 2; p <= kBound && rest > 1; ++p) {
    unsigned parity = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      parity ^= 1U;
    }
    if (parity != 0) m *= p;
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t()) == 0) {
    if (rest >= mpz_class("1000000000000000")) return std::nullopt;
    m *= rest;
  }
  if (q.sign() < 0) m = -m;
  if (!m.fits_slong_p()) return std::nullopt;
  return m.get_si();
}

/// Finds a with a_j^2 = lambda * u_j for one common nonzero lambda, with every
/// a_j in a single field Q or Q(sqrt m), m > 1.
inline std::optional<Coords> common_square_roots(const Coords& u) {
  for (const auto& pivot : u) {
    if (pivot.is_zero()) continue;
    const Scalar scale = pivot.inverse();
    Coords v;
    long radicand = 0;
    for (const auto& x : u) {
      v.push_back(x * scale);
      if (!v.back().is_rational()) radicand = v.back().radicand();
    }
    if (radicand == 0) {
      for (const auto& x : v) {
        if (x.as_rational().exact_sqrt()) continue;
        const auto m = square_class(x.as_rational());
        if (m && *m > 1) radicand = *m;
        break;
      }
    }
    Coords roots;
    for (const auto& x : v) {
      auto r = x.exact_sqrt(radicand);
      if (!r) break;
      roots.push_back(*r);
    }
    if (roots.size() == v.size()) return roots;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classification.

enum class Verdict { NotGenerallyLinear, StarConfig, WHSC, HSC };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotGenerallyLinear: return "NotGenerallyLinear";
    case Verdict::StarConfig: return "StarConfig";
    case Verdict::WHSC: return "WHSC";
    case Verdict::HSC: return "HSC";
  }
  return "?";
}

/// Hyperplane H and factor points P_i with P_i * H = V(L_i) and P_i in H.
struct StrongHadamardSet {
  LinearForm hyperplane;
  std::vector<ProjPoint> points;
};

/// Evidence that the forms are a strong Hadamard set. `squares` is a kernel
/// vector of the reciprocal-coefficient matrix with no zero entry; the
/// hyperplane coefficients are its square roots. `explicit_set` is present
/// when those roots live in Q or a single Q(sqrt m); otherwise the set exists
/// only over the complex numbers.
struct HscWitness {
  Coords squares;
  std::optional<StrongHadamardSet> explicit_set;
};

struct Classification {
  Verdict verdict = Verdict::NotGenerallyLinear;
  /// Rank of the reciprocal-coefficient matrix, when every form has full support.
  std::optional<std::size_t> reciprocal_rank;
  std::optional<HscWitness> witness;

  [[nodiscard]] bool at_least(Verdict v) const { return static_cast<int>(verdict) >= static_cast<int>(v); }
};

/// Row i holds 1/c_j(i), the reciprocals of the coefficients of L_i.
inline Matrix<Scalar> reciprocal_matrix(const std::vector<LinearForm>& forms) {
  std::vector<Coords> rows;
  for (const auto& f : forms) {
    if (!f.full_support()) throw std::invalid_argument("reciprocal matrix needs full-support forms, got " + f.str());
    Coords row;
    for (const auto& c : f.coeffs()) row.push_back(c.inverse());
    rows.push_back(std::move(row));
  }
  return coordinate_matrix(rows);
}

/// A kernel vector with no zero entry, when one exists. Tries the
/// combinations b_0 + s b_1 + s^2 b_2 + ... for s = 0, 1, 2, ...; each
/// coordinate is a nonzero polynomial in s, so this terminates.
inline std::optional<Coords> totally_nonzero_kernel_vector(const Matrix<Scalar>& m) {
  const auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool all_zero = true;
    for (const auto& b : basis) all_zero = all_zero && b[j].is_zero();
    if (all_zero) return std::nullopt;
  }
  for (long s = 0;; ++s) {
    Coords u(m.cols(), Scalar(0));
    Scalar power(1);
    for (const auto& b : basis) {
      for (std::size_t j = 0; j < u.size(); ++j) u[j] += power * b[j];
      power *= Scalar(s);
    }
    bool ok = true;
    for (const auto& x : u) ok = ok && !x.is_zero();
    if (ok) return u;
  }
}

/// Strong Hadamard set witness for full-support generally linear forms.
///
/// V(L_i) = P_i * V(a) forces p_j(i) proportional to a_j / c_j(i), and then
/// P_i in V(a) reads sum_j a_j^2 / c_j(i) = 0. So a witness is exactly a
/// kernel vector u of the reciprocal matrix with all u_j nonzero, a_j = sqrt(u_j).
inline std::optional<HscWitness> hsc_witness(const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("hsc_witness of an empty form list");
  require_common_dimension(forms);
  for (const auto& f : forms)
    if (!f.full_support()) throw std::invalid_argument("hsc_witness needs full-support forms, got " + f.str());
  if (!generally_linear(forms)) throw NotGenerallyLinear();

  auto u = totally_nonzero_kernel_vector(reciprocal_matrix(forms));
  if (!u) return std::nullopt;
  HscWitness w{*u, std::nullopt};
  if (auto a = common_square_roots(*u)) {
    LinearForm h(*a, forms.front().ring());
    std::vector<ProjPoint> points;
    for (const auto& f : forms) {
      Coords p;
      for (std::size_t j = 0; j < a->size(); ++j) p.push_back((*a)[j] / f[j]);
      points.emplace_back(std::move(p));
    }
    w.explicit_set = StrongHadamardSet{std::move(h), std::move(points)};
  }
  return w;
}

/// Re-checks a witness against the forms using only field arithmetic.
inline bool verify_witness(const std::vector<LinearForm>& forms, const HscWitness& w) {
  for (const auto& x : w.squares)
    if (x.is_zero()) return false;
  for (const auto& f : forms) {
    if (f.coeffs().size() != w.squares.size()) return false;
    Scalar s;
    for (std::size_t j = 0; j < w.squares.size(); ++j) s += w.squares[j] / f[j];
    if (!s.is_zero()) return false;
  }
  if (!w.explicit_set) return true;
  const auto& set = *w.explicit_set;
  if (set.points.size() != forms.size()) return false;
  // a_j^2 must be proportional to u_j.
  Coords a_sq;
  for (const auto& a : set.hyperplane.coeffs()) a_sq.push_back(a * a);
  if (!detail::proportional(a_sq, w.squares)) return false;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const ProjPoint& p = set.points[i];
    if (!p.all_nonzero() || !set.hyperplane.contains(p)) return false;
    if (!(hadamard(p, set.hyperplane) == forms[i])) return false;
  }
  return true;
}

/// NotGenerallyLinear < StarConfig < WHSC < HSC. A generally linear family is
/// a WHSC iff every form has full support; it is an HSC iff additionally a
/// strong Hadamard witness exists.
inline Classification classify(const std::vector<LinearForm>& forms) {
  Classification out;
  if (forms.empty()) return out;
  require_common_dimension(forms);
  if (!generally_linear(forms)) return out;
  out.verdict = Verdict::StarConfig;
  for (const auto& f : forms)
    if (!f.full_support()) return out;
  out.verdict = Verdict::WHSC;
  out.reciprocal_rank = rank(reciprocal_matrix(forms));
  out.witness = hsc_witness(forms);
  if (out.witness) out.verdict = Verdict::HSC;
  return out;
}

struct WhscReport {
  std::vector<LinearForm> forms;
  Classification classification;
  std::optional<StarConfig> config;
  /// Whether the Cremona images of the factor points are in general position.
  bool cremona_general_position = false;
};

/// Builds H_j = P_j * h and decides the WHSC property twice: from the forms,
/// and from general position of the Cremona images of the P_j. Both routes
/// agree for every valid input.
inline WhscReport whsc_from_data(const LinearForm& h, const std::vector<ProjPoint>& points, std::size_t c) {
  if (!h.full_support()) throw std::invalid_argument("hyperplane must meet no coordinate point: " + h.str());
  if (points.empty()) throw std::invalid_argument("whsc_from_data needs at least one point");
  if (c < 1 || c > h.dimension())
    throw std::invalid_argument("codimension " + std::to_string(c) + " outside [1, " + std::to_string(h.dimension()) +
                                "]");
  WhscReport report;
  std::vector<ProjPoint> images;
  for (const auto& p : points) {
    if (!p.all_nonzero()) throw std::invalid_argument("factor point has a zero coordinate: " + p.str());
    report.forms.push_back(hadamard(p, h));
    images.push_back(cremona(p));
  }
  report.classification = classify(report.forms);
  report.cremona_general_position = general_position(images);
  assert(report.classification.at_least(Verdict::WHSC) == report.cremona_general_position);
  if (report.classification.at_least(Verdict::StarConfig) && report.forms.size() >= c)
    report.config = build_star_config(report.forms, c);
  return report;
}

}  // namespace hstar
