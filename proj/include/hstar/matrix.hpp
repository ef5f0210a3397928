#pragma once

// Dense exact linear algebra over any exact field type (Rational, Scalar).

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hstar {

template <class F>
concept ExactField = requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  F(0);
  F(1);
};

/// Calls `visit` on every k-subset of {0,...,n-1} in lexicographic order.
/// Stops early when `visit` returns false.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

template <ExactField F>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<F> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix s(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
    return s;
  }

  [[nodiscard]] std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<F> out(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Cofactor expansion along the first row. Exponential; meant for n <= 4 and
/// as the cross-check path for the elimination determinant.
template <ExactField F>
F cofactor_determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return F(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  F det(0);
  std::vector<std::size_t> rest_rows(n - 1);
  for (std::size_t i = 1; i < n; ++i) rest_rows[i - 1] = i;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cs;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cs.push_back(k);
    const F term = m(0, j) * cofactor_determinant(m.submatrix(rest_rows, cs));
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Fraction-free (Bareiss) elimination determinant.
template <ExactField F>
F bareiss_determinant(Matrix<F> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return F(1);
  F prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return F(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = F(0);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Exact determinant: cofactor expansion up to 3x3, Bareiss elimination above.
template <ExactField F>
F determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() <= 3) return cofactor_determinant(m);
  return bareiss_determinant(m);
}

/// Reduced row echelon form together with the pivot columns.
template <ExactField F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
template <ExactField F>
Echelon<F> row_reduce(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of the right null space, one vector per free column (free entry 1,
/// other free entries 0). Empty iff the matrix has full column rank.
template <ExactField F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  const auto [red, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b. When underdetermined, free variables are set to zero.
template <ExactField F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto [red, pivots] = row_reduce(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

template <ExactField F>
struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  F value;
};

/// All minors of size min(rows, cols). The longer dimension is enumerated in
/// lexicographic subset order; the shorter one is taken whole.
template <ExactField F>
std::vector<Minor<F>> maximal_minors(const Matrix<F>& m) {
  std::vector<Minor<F>> out;
  std::vector<std::size_t> all_rows(m.rows()), all_cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
  for (std::size_t j = 0; j < m.cols(); ++j) all_cols[j] = j;
  if (m.rows() >= m.cols()) {
    for_each_subset(m.rows(), m.cols(), [&](const std::vector<std::size_t>& rs) {
      out.push_back({rs, all_cols, determinant(m.submatrix(rs, all_cols))});
      return true;
    });
  } else {
    for_each_subset(m.cols(), m.rows(), [&](const std::vector<std::size_t>& cs) {
      out.push_back({all_rows, cs, determinant(m.submatrix(all_rows, cs))});
      return true;
    });
  }
  return out;
}

/// True iff every maximal minor is nonzero. Stops at the first zero minor.
template <ExactField F>
bool all_maximal_minors_nonzero(const Matrix<F>& m) {
  bool ok = true;
  std::vector<std::size_t> all_cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) all_cols[j] = j;
  if (m.rows() >= m.cols()) {
    for_each_subset(m.rows(), m.cols(), [&](const std::vector<std::size_t>& rs) {
      ok = !determinant(m.submatrix(rs, all_cols)).is_zero();
      return ok;
    });
  } else {
    std::vector<std::size_t> all_rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
    for_each_subset(m.cols(), m.rows(), [&](const std::vector<std::size_t>& cs) {
      ok = !determinant(m.submatrix(all_rows, cs)).is_zero();
      return ok;
    });
  }
  return ok;
}

}  // namespace hstar
