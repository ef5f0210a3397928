#pragma once

// Points and hyperplanes of P^n with Hadamard products, the standard Cremona
// transformation, coordinate strata and general position.

#include "hstar/field.hpp"
#include "hstar/matrix.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hstar {

/// Raised when a geometric operation is undefined on its input
/// (e.g. the Hadamard product of [1:0] and [0:1]).
class GeometryError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

using Coords = std::vector<Scalar>;

namespace detail {

inline bool all_zero(const Coords& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Scale so that the first nonzero entry is 1.
inline Coords normalized(const Coords& v) {
  Coords out = v;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const Scalar inv = x.inverse();
    for (auto& y : out) y *= inv;
    break;
  }
  return out;
}

inline bool proportional(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) return false;
  // a_i b_j == a_j b_i for all pairs reduces to comparing against one pivot.
  std::size_t p = 0;
  while (p < a.size() && a[p].is_zero()) ++p;
  if (p == a.size() || b[p].is_zero()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] * b[p] == b[i] * a[p])) return false;
  return true;
}

inline std::string bracket(const Coords& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " : " : "") + v[i].str();
  return s + "]";
}

inline Coords parse_bracket(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\n");
  std::size_t e = text.find_last_not_of(" \t\n");
  if (b == std::string_view::npos || text[b] != '[' || text[e] != ']')
    throw ParseError("expected '[a : b : ...]', got '" + std::string(text) + "'");
  std::string_view body = text.substr(b + 1, e - b - 1);
  Coords out;
  std::size_t pos = 0;
  while (true) {
    const auto colon = body.find(':', pos);
    out.push_back(Scalar::parse(body.substr(pos, colon == std::string_view::npos ? colon : colon - pos)));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  return out;
}

}  // namespace detail

/// A point of P^n given by homogeneous coordinates; equality is up to scale.
class ProjPoint {
public:
  explicit ProjPoint(Coords coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("a projective point needs at least 2 coordinates");
    if (detail::all_zero(coords_)) throw std::invalid_argument("all coordinates of a projective point are zero");
  }
  ProjPoint(std::initializer_list<Scalar> coords) : ProjPoint(Coords(coords)) {}

  static ProjPoint parse(std::string_view text) { return ProjPoint(detail::parse_bracket(text)); }

  /// All-ones point, the identity for the Hadamard product.
  static ProjPoint ones(std::size_t n) { return ProjPoint(Coords(n + 1, Scalar(1))); }

  [[nodiscard]] std::size_t dimension() const { return coords_.size() - 1; }
  [[nodiscard]] const Coords& coords() const { return coords_; }
  [[nodiscard]] const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] std::size_t zero_count() const {
    std::size_t z = 0;
    for (const auto& c : coords_) z += c.is_zero() ? 1 : 0;
    return z;
  }
  /// No coordinate vanishes, i.e. the point lies off Delta_{n-1}.
  [[nodiscard]] bool all_nonzero() const { return zero_count() == 0; }

  /// Representative with first nonzero coordinate 1. For printing and hashing.
  [[nodiscard]] ProjPoint canonical() const { return ProjPoint(detail::normalized(coords_)); }

  [[nodiscard]] std::string str() const { return detail::bracket(coords_); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return detail::proportional(a.coords_, b.coords_); }
  friend std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.str(); }

private:
  Coords coords_;
};

/// Polynomial ring a form lives in: S = k[x_0..x_n] or the dual T = k[y_0..y_n].
enum class Ring { S, T };

inline char variable_letter(Ring r) { return r == Ring::S ? 'x' : 'y'; }

/// A nonzero linear form; V(L) is compared up to scale.
class LinearForm {
public:
  explicit LinearForm(Coords coeffs, Ring ring = Ring::S) : coeffs_(std::move(coeffs)), ring_(ring) {
    if (coeffs_.size() < 2) throw std::invalid_argument("a linear form needs at least 2 coefficients");
    if (detail::all_zero(coeffs_)) throw std::invalid_argument("the zero linear form defines no hyperplane");
  }
  LinearForm(std::initializer_list<Scalar> coeffs, Ring ring = Ring::S) : LinearForm(Coords(coeffs), ring) {}

  [[nodiscard]] std::size_t dimension() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Coords& coeffs() const { return coeffs_; }
  [[nodiscard]] const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] LinearForm with_ring(Ring r) const { return LinearForm(coeffs_, r); }

  [[nodiscard]] std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) s.push_back(i);
    return s;
  }
  /// Every variable appears; equivalently V(L) misses all coordinate points.
  [[nodiscard]] bool full_support() const { return support().size() == coeffs_.size(); }

  [[nodiscard]] Scalar evaluate(const ProjPoint& p) const {
    if (p.dimension() != dimension()) throw std::invalid_argument("dimension mismatch evaluating a linear form");
    Scalar s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += coeffs_[i] * p[i];
    return s;
  }
  [[nodiscard]] bool contains(const ProjPoint& p) const { return evaluate(p).is_zero(); }

  [[nodiscard]] LinearForm canonical() const { return LinearForm(detail::normalized(coeffs_), ring_); }

  /// Coefficient vector as "[a : b : c]".
  [[nodiscard]] std::string bracket_str() const { return detail::bracket(coeffs_); }
  /// Polynomial text such as "13/4*y0 + 1/2*y1 + 1/3*y2".
  [[nodiscard]] std::string str() const;

  /// Same hyperplane, ignoring the ring tag.
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return detail::proportional(a.coeffs_, b.coeffs_);
  }
  friend std::ostream& operator<<(std::ostream& os, const LinearForm& l) { return os << l.str(); }

private:
  Coords coeffs_;
  Ring ring_;
};

inline std::string LinearForm::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    const std::string var = std::string(1, variable_letter(ring_)) + std::to_string(i);
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.as_rational().sign() < 0;
      const Rational mag = negative ? -c.as_rational() : c.as_rational();
      coef = mag == Rational(1) ? "" : mag.str() + "*";
    } else {
      coef = "(" + c.str() + ")*";
    }
    if (out.empty())
      out += (negative ? "-" : "") + coef + var;
    else
      out += (negative ? " - " : " + ") + coef + var;
  }
  return out;
}

inline void require_same_dimension(const ProjPoint& a, const ProjPoint& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("points live in different projective spaces");
}

/// Coordinatewise product; undefined when every product a_i b_i vanishes.
inline ProjPoint hadamard(const ProjPoint& a, const ProjPoint& b) {
  require_same_dimension(a, b);
  Coords c(a.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] * b[i];
  if (detail::all_zero(c)) throw GeometryError("undefined Hadamard product " + a.str() + " * " + b.str());
  return ProjPoint(std::move(c));
}

/// P * V(a_0 x_0 + ... + a_n x_n) = V(a_0 x_0 / p_0 + ... + a_n x_n / p_n).
/// Requires every coordinate of P to be nonzero.
inline LinearForm hadamard(const ProjPoint& p, const LinearForm& h) {
  if (p.dimension() != h.dimension()) throw std::invalid_argument("point and hyperplane dimensions differ");
  if (!p.all_nonzero())
    throw GeometryError("Hadamard product with a hyperplane needs a point off the coordinate hyperplanes, got " +
                        p.str());
  Coords c(h.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = h[i] / p[i];
  return LinearForm(std::move(c), h.ring());
}

/// Standard Cremona transformation [p_0 : ... : p_n] -> [1/p_0 : ... : 1/p_n],
/// defined off the coordinate hyperplanes.
inline ProjPoint cremona(const ProjPoint& p) {
  if (!p.all_nonzero()) throw GeometryError("Cremona transformation undefined at " + p.str());
  Coords c(p.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[i].inverse();
  return ProjPoint(std::move(c));
}

/// Smallest i with p in Delta_i (the union of coordinate (i)-planes), i.e.
/// n minus the number of vanishing coordinates. Empty when no coordinate
/// vanishes.
inline std::optional<std::size_t> delta_stratum(const ProjPoint& p) {
  const std::size_t zeros = p.zero_count();
  if (zeros == 0) return std::nullopt;
  return p.dimension() - zeros;
}

/// Stacks coordinate vectors as rows.
inline Matrix<Scalar> coordinate_matrix(const std::vector<Coords>& rows) {
  return Matrix<Scalar>::from_rows(rows);
}

inline Matrix<Scalar> coordinate_matrix(const std::vector<ProjPoint>& points) {
  std::vector<Coords> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(p.coords());
  return coordinate_matrix(rows);
}

/// Rows in general position: with r >= n+1 rows every maximal minor is
/// nonzero; with r <= n rows they are linearly independent.
inline bool rows_in_general_position(const Matrix<Scalar>& m) {
  if (m.rows() < m.cols()) return rank(m) == m.rows();
  return all_maximal_minors_nonzero(m);
}

/// No n+1 of the points lie on a hyperplane (fewer than n+1 points must be
/// linearly independent).
inline bool general_position(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw std::invalid_argument("general position of an empty point list");
  for (const auto& p : points) require_same_dimension(points.front(), p);
  return rows_in_general_position(coordinate_matrix(points));
}

}  // namespace hstar
