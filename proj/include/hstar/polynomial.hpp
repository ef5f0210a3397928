#pragma once

// Homogeneous forms in S = k[x_0..x_n] or T = k[y_0..y_n], sparse by
// exponent vector, with the exact text format
//   "1/5*x0^2 + x0*x1 + (1 + 2*sqrt(5))*x2^2".

#include "hstar/field.hpp"
#include "hstar/projective.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hstar {

using Exponent = std::vector<unsigned>;

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// descending lexicographic order (x0^d first).
inline std::vector<Exponent> monomials(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) return out;
  Exponent e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

inline mpz_class factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

/// d! / (e_0! ... e_n!)
inline mpz_class multinomial(const Exponent& e) {
  unsigned d = 0;
  for (auto k : e) d += k;
  mpz_class m = factorial(d);
  for (auto k : e) m /= factorial(k);
  return m;
}

class HomogeneousForm {
public:
  using Terms = std::map<Exponent, Scalar, std::greater<>>;

  HomogeneousForm(std::size_t nvars, unsigned degree, Ring ring = Ring::S)
      : nvars_(nvars), degree_(degree), ring_(ring) {
    if (nvars == 0) throw std::invalid_argument("a form needs at least one variable");
  }

  /// Parses the text format. Without `nvars` the variable count is the
  /// largest index plus one.
  static HomogeneousForm parse(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

  static HomogeneousForm monomial(const Exponent& e, Scalar c = Scalar(1), Ring ring = Ring::S) {
    unsigned d = 0;
    for (auto k : e) d += k;
    HomogeneousForm f(e.size(), d, ring);
    f.add_term(e, std::move(c));
    return f;
  }

  /// (l_0 x_0 + ... + l_n x_n)^d expanded in the monomial basis.
  static HomogeneousForm linear_power(const Coords& l, unsigned d, Ring ring = Ring::S) {
    HomogeneousForm f(l.size(), d, ring);
    for (const auto& e : monomials(l.size(), d)) {
      Scalar c = Scalar(Rational(multinomial(e)));
      for (std::size_t i = 0; i < e.size() && !c.is_zero(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) c *= l[i];
      f.add_term(e, std::move(c));
    }
    return f;
  }

  static HomogeneousForm from_linear(const LinearForm& l) { return linear_power(l.coeffs(), 1, l.ring()); }

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Scalar coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent vector has the wrong length");
    unsigned d = 0;
    for (auto k : e) d += k;
    if (d != degree_)
      throw std::invalid_argument("term of degree " + std::to_string(d) + " in a form of degree " +
                                  std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Coefficient vector in the order of monomials(nvars, degree).
  [[nodiscard]] Coords coefficient_vector() const {
    Coords v;
    for (const auto& e : monomials(nvars_, degree_)) v.push_back(coefficient(e));
    return v;
  }

  HomogeneousForm& operator+=(const HomogeneousForm& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  HomogeneousForm& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator*(HomogeneousForm a, const Scalar& s) { return a *= s; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) {
    return a += b * Scalar(-1);
  }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.nvars_ == b.nvars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_ &&
           (a.degree_ == b.degree_ || a.terms_.empty());
  }

  [[nodiscard]] std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const HomogeneousForm& f) { return os << f.str(); }

private:
  void require_compatible(const HomogeneousForm& o) const {
    if (o.nvars_ != nvars_ || o.degree_ != degree_ || o.ring_ != ring_)
      throw std::invalid_argument("adding forms from different graded pieces");
  }

  std::size_t nvars_;
  unsigned degree_;
  Ring ring_;
  Terms terms_;
};

inline std::string HomogeneousForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  const char letter = variable_letter(ring_);
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(1, letter) + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coef;
    if (c.is_rational()) {
      negative = c.as_rational().sign() < 0;
      const Rational mag = negative ? -c.as_rational() : c.as_rational();
      if (mono.empty())
        coef = mag.str();
      else
        coef = mag == Rational(1) ? "" : mag.str() + "*";
    } else {
      coef = "(" + c.str() + ")" + (mono.empty() ? "" : "*");
    }
    if (out.empty())
      out += (negative ? "-" : "") + coef + mono;
    else
      out += (negative ? " - " : " + ") + coef + mono;
  }
  return out;
}

namespace detail {

// Splits at top-level '+'/'-' (outside parentheses), keeping the sign with
// each piece.
inline std::vector<std::pair<int, std::string>> split_signed_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  bool pending_sign = false;
  std::string cur;
  for (const char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in '" + s + "'");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!cur.empty()) {
        out.emplace_back(sign, cur);
        cur.clear();
        sign = 1;
      } else if (pending_sign) {
        throw ParseError("repeated sign in '" + s + "'");
      }
      pending_sign = true;
      if (ch == '-') sign = -1;
      continue;
    }
    pending_sign = false;
    cur.push_back(ch);
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + s + "'");
  if (cur.empty()) throw ParseError("dangling sign or empty polynomial in '" + s + "'");
  out.emplace_back(sign, cur);
  return out;
}

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && ch == sep) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  out.push_back(cur);
  return out;
}

struct ParsedTerm {
  Scalar coeff{1};
  std::map<std::size_t, unsigned> powers;
};

inline ParsedTerm parse_term(const std::string& term, char& letter) {
  ParsedTerm t;
  for (const auto& factor : split_top_level(term, '*')) {
    if (factor.empty()) throw ParseError("empty factor in term '" + term + "'");
    const char c0 = factor[0];
    if (c0 == '(') {
      if (factor.back() != ')') throw ParseError("unterminated '(' in '" + factor + "'");
      t.coeff *= Scalar::parse(factor.substr(1, factor.size() - 2));
    } else if (factor.rfind("sqrt(", 0) == 0) {
      t.coeff *= Scalar::parse(factor);
    } else if (c0 == 'x' || c0 == 'y') {
      if (letter != 0 && letter != c0) throw ParseError("mixed x and y variables in one form");
      letter = c0;
      const auto caret = factor.find('^');
      const std::string idx = factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
      const std::string pow = caret == std::string::npos ? "1" : factor.substr(caret + 1);
      const auto digits = [](const std::string& d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
      };
      if (!digits(idx) || !digits(pow) || idx.size() > 6 || pow.size() > 6)
        throw ParseError("malformed variable '" + factor + "'");
      t.powers[std::stoul(idx)] += static_cast<unsigned>(std::stoul(pow));
    } else {
      t.coeff *= Scalar(Rational::parse(factor));
    }
  }
  return t;
}

}  // namespace detail

inline HomogeneousForm HomogeneousForm::parse(std::string_view text, std::optional<std::size_t> nvars) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");

  char letter = 0;
  std::vector<detail::ParsedTerm> terms;
  std::size_t max_index = 0;
  for (const auto& [sign, body] : detail::split_signed_terms(s)) {
    auto t = detail::parse_term(body, letter);
    if (sign < 0) t.coeff = -t.coeff;
    for (const auto& [i, k] : t.powers) max_index = std::max(max_index, i);
    terms.push_back(std::move(t));
  }
  const std::size_t count = nvars.value_or(max_index + 1);
  if (max_index >= count)
    throw ParseError("variable index " + std::to_string(max_index) + " out of range for " + std::to_string(count) +
                     " variables");
  std::optional<unsigned> degree;
  for (const auto& t : terms) {
    unsigned d = 0;
    for (const auto& [i, k] : t.powers) d += k;
    if (degree && *degree != d) throw ParseError("polynomial is not homogeneous: '" + s + "'");
    degree = d;
  }
  HomogeneousForm f(count, *degree, letter == 'y' ? Ring::T : Ring::S);
  for (const auto& t : terms) {
    Exponent e(count, 0);
    for (const auto& [i, k] : t.powers) e[i] = k;
    f.add_term(e, t.coeff);
  }
  return f;
}

/// Accepts either a coefficient vector "[a : b : c]" or a degree-1 polynomial
/// such as "13/4*y0 + 1/2*y1 + 1/3*y2".
inline LinearForm parse_linear_form(std::string_view text, std::optional<std::size_t> nvars = std::nullopt,
                                    Ring default_ring = Ring::T) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') {
    LinearForm l(detail::parse_bracket(text), default_ring);
    if (nvars && l.coeffs().size() != *nvars) throw ParseError("linear form has the wrong number of coefficients");
    return l;
  }
  const auto f = HomogeneousForm::parse(text, nvars);
  if (f.degree() != 1) throw ParseError("expected a linear form, got degree " + std::to_string(f.degree()));
  Coords c(f.nvars(), Scalar(0));
  for (const auto& [e, v] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) c[i] = v;
  return LinearForm(std::move(c), f.ring());
}

}  // namespace hstar
