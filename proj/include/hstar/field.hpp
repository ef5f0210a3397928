#pragma once

// Exact scalars: GMP-backed rationals and the quadratic extension Q(sqrt m).
// No floating-point path exists anywhere in this header.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace hstar {

/// Raised for exact-arithmetic failures such as division by zero or mixing
/// two different radicands.
class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when text cannot be parsed into an exact value.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational kept in canonical form (positive denominator,
/// coprime numerator) at all times.
class Rational {
public:
  Rational() = default;
  Rational(long v) : value_(v) {}
  Rational(int v) : value_(v) {}
  Rational(const mpz_class& v) : value_(v) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading sign.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& gmp() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return Rational(mpq_class(1) / value_);
  }

  /// Square root when the value is the square of a rational.
  [[nodiscard]] std::optional<Rational> exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class num = value_.get_num();
    const mpz_class den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(den.get_mpz_t()) == 0)
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
  }

  [[nodiscard]] std::string str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
  mpq_class value_{0};
};

inline Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational literal");
  const auto digits_ok = [](std::string_view part) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

/// True when `m` is a square-free integer other than 0 and 1.
inline bool valid_radicand(long m) {
  if (m == 0 || m == 1) return false;
  unsigned long v = m < 0 ? static_cast<unsigned long>(-m) : static_cast<unsigned long>(m);
  for (unsigned long p = 2; p * p <= v; ++p)
    if (v % (p * p) == 0) return false;
  return true;
}

/// rational_part + surd_part * sqrt(radicand), radicand square-free and > 1.
class QuadExt {
public:
  QuadExt(Rational rational_part, Rational surd_part, long radicand)
      : rational_(std::move(rational_part)), surd_(std::move(surd_part)), radicand_(radicand) {
    if (radicand_ < 2 || !valid_radicand(radicand_))
      throw ArithmeticError("radicand must be a positive square-free integer > 1, got " +
                            std::to_string(radicand_));
  }

  [[nodiscard]] const Rational& rational_part() const { return rational_; }
  [[nodiscard]] const Rational& surd_part() const { return surd_; }
  [[nodiscard]] long radicand() const { return radicand_; }

  [[nodiscard]] bool is_zero() const { return rational_.is_zero() && surd_.is_zero(); }
  [[nodiscard]] QuadExt conjugate() const { return {rational_, -surd_, radicand_}; }
  /// x * conj(x), always rational.
  [[nodiscard]] Rational norm() const {
    return rational_ * rational_ - Rational(radicand_) * surd_ * surd_;
  }
  [[nodiscard]] QuadExt inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw ArithmeticError("division by zero");
    return {rational_ / n, -surd_ / n, radicand_};
  }

  QuadExt operator-() const { return {-rational_, -surd_, radicand_}; }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    check_same(a, b);
    return {a.rational_ + b.rational_, a.surd_ + b.surd_, a.radicand_};
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    check_same(a, b);
    return {a.rational_ - b.rational_, a.surd_ - b.surd_, a.radicand_};
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    check_same(a, b);
    return {a.rational_ * b.rational_ + Rational(a.radicand_) * a.surd_ * b.surd_,
            a.rational_ * b.surd_ + a.surd_ * b.rational_, a.radicand_};
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.radicand_ == b.radicand_ && a.rational_ == b.rational_ && a.surd_ == b.surd_;
  }

  /// Square root inside Q(sqrt m), when one exists.
  [[nodiscard]] std::optional<QuadExt> exact_sqrt() const;

  [[nodiscard]] std::string str() const;

private:
  static void check_same(const QuadExt& a, const QuadExt& b) {
    if (a.radicand_ != b.radicand_)
      throw ArithmeticError("mixed radicands sqrt(" + std::to_string(a.radicand_) + ") and sqrt(" +
                            std::to_string(b.radicand_) + ")");
  }

  Rational rational_;
  Rational surd_;
  long radicand_;
};

inline std::optional<QuadExt> QuadExt::exact_sqrt() const {
  const Rational m(radicand_);
  if (surd_.is_zero()) {
    if (auto r = rational_.exact_sqrt()) return QuadExt(*r, 0, radicand_);
    if (auto s = (rational_ / m).exact_sqrt()) return QuadExt(0, *s, radicand_);
    return std::nullopt;
  }
  // (a + b sqrt m)^2 = a^2 + m b^2 + 2ab sqrt m, so N(x) = (a^2 - m b^2)^2.
  const auto root_norm = norm().exact_sqrt();
  if (!root_norm) return std::nullopt;
  for (const Rational& cand : {(rational_ + *root_norm) / Rational(2), (rational_ - *root_norm) / Rational(2)}) {
    if (cand.is_zero()) continue;
    if (auto a = cand.exact_sqrt()) {
      QuadExt root(*a, surd_ / (Rational(2) * *a), radicand_);
      if (root * root == *this) return root;
    }
  }
  return std::nullopt;
}

inline std::string QuadExt::str() const {
  const std::string surd = "sqrt(" + std::to_string(radicand_) + ")";
  std::string s_abs = (surd_.sign() < 0 ? -surd_ : surd_).str();
  std::string surd_term = s_abs == "1" ? surd : s_abs + "*" + surd;
  if (rational_.is_zero()) return (surd_.sign() < 0 ? "-" : "") + surd_term;
  return rational_.str() + (surd_.sign() < 0 ? " - " : " + ") + surd_term;
}

/// Element of the working field: a rational, or an element of Q(sqrt m).
/// Values with zero surd part always collapse to the rational alternative,
/// so equality is structural.
class Scalar {
public:
  Scalar() : value_(Rational{}) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(QuadExt x) : value_(Rational{}) {
    if (x.surd_part().is_zero())
      value_ = x.rational_part();
    else
      value_ = std::move(x);
  }
  static Scalar sqrt_of(long radicand) { return QuadExt(0, 1, radicand); }

  /// Parses "p/q", "p/q + r/s*sqrt(m)", "r/s*sqrt(m)", "-sqrt(m)", ...
  static Scalar parse(std::string_view text);

  [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  [[nodiscard]] const Rational& as_rational() const {
    if (!is_rational()) throw ArithmeticError("scalar is not rational");
    return std::get<Rational>(value_);
  }
  [[nodiscard]] const QuadExt* as_quad() const { return std::get_if<QuadExt>(&value_); }
  /// 0 for rationals, the radicand otherwise.
  [[nodiscard]] long radicand() const { return is_rational() ? 0 : std::get<QuadExt>(value_).radicand(); }
  [[nodiscard]] Rational rational_part() const {
    return is_rational() ? std::get<Rational>(value_) : std::get<QuadExt>(value_).rational_part();
  }
  [[nodiscard]] Rational surd_part() const {
    return is_rational() ? Rational{} : std::get<QuadExt>(value_).surd_part();
  }

  [[nodiscard]] bool is_zero() const {
    return is_rational() && std::get<Rational>(value_).is_zero();
  }
  [[nodiscard]] bool is_one() const { return is_rational() && std::get<Rational>(value_) == Rational(1); }

  [[nodiscard]] Scalar inverse() const {
    if (is_rational()) return std::get<Rational>(value_).inverse();
    return std::get<QuadExt>(value_).inverse();
  }
  [[nodiscard]] Scalar conjugate() const {
    if (is_rational()) return *this;
    return std::get<QuadExt>(value_).conjugate();
  }
  [[nodiscard]] Rational norm() const {
    if (is_rational()) return std::get<Rational>(value_) * std::get<Rational>(value_);
    return std::get<QuadExt>(value_).norm();
  }

  /// Square root in the rational field or in this value's own extension.
  /// With `radicand` set, a rational may also take the root b*sqrt(radicand).
  [[nodiscard]] std::optional<Scalar> exact_sqrt(long radicand = 0) const {
    if (const auto* q = as_quad()) {
      if (auto r = q->exact_sqrt()) return Scalar(*r);
      return std::nullopt;
    }
    const Rational& r = std::get<Rational>(value_);
    if (auto s = r.exact_sqrt()) return Scalar(*s);
    if (radicand != 0)
      if (auto q = QuadExt(r, 0, radicand).exact_sqrt()) return Scalar(*q);
    return std::nullopt;
  }

  [[nodiscard]] std::string str() const {
    return std::visit([](const auto& v) { return v.str(); }, value_);
  }

  Scalar operator-() const {
    return std::visit([](const auto& v) { return Scalar(-v); }, value_);
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return a.rat() + b.rat();
    return a.lift(b) + b.lift(a);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return a.rat() - b.rat();
    return a.lift(b) - b.lift(a);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return a.rat() * b.rat();
    return a.lift(b) * b.lift(a);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

  [[nodiscard]] std::size_t hash() const {
    const std::hash<std::string> h;
    return h(str());
  }

private:
  [[nodiscard]] const Rational& rat() const { return std::get<Rational>(value_); }
  // Both operands as QuadExt over the radicand of whichever one is irrational.
  [[nodiscard]] QuadExt lift(const Scalar& other) const {
    if (const auto* q = as_quad()) return *q;
    return QuadExt(rat(), 0, other.radicand());
  }

  std::variant<Rational, QuadExt> value_;
};

inline Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
  if (s.empty()) throw ParseError("empty scalar literal");
  Scalar total;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in scalar '" + s + "'");
    }
    first = false;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw ParseError("dangling sign in scalar '" + s + "'");

    Rational coeff(1);
    long radicand = 0;
    const auto root_at = term.find("sqrt(");
    if (root_at != std::string::npos) {
      if (term.back() != ')') throw ParseError("unterminated sqrt in '" + s + "'");
      const std::string inner = term.substr(root_at + 5, term.size() - root_at - 6);
      try {
        std::size_t used = 0;
        radicand = std::stol(inner, &used);
        if (used != inner.size()) throw ParseError("bad radicand '" + inner + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad radicand '" + inner + "'");
      }
      if (radicand < 2 || !valid_radicand(radicand))
        throw ParseError("radicand must be square-free and > 1: '" + inner + "'");
      std::string head = term.substr(0, root_at);
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' before sqrt in '" + s + "'");
        head.pop_back();
        coeff = Rational::parse(head);
      }
    } else {
      coeff = Rational::parse(term);
    }
    if (sign < 0) coeff = -coeff;
    total += radicand == 0 ? Scalar(coeff) : Scalar(QuadExt(0, coeff, radicand));
  }
  return total;
}

}  // namespace hstar

template <>
struct std::hash<hstar::Scalar> {
  std::size_t operator()(const hstar::Scalar& s) const noexcept { return s.hash(); }
};
