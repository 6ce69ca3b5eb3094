#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sesq/field.hpp"

namespace sesq {

using Vec = std::vector<Elem>;

inline Vec zero_vec(const Field& k, std::size_t n) { return Vec(n, k.zero()); }

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Elem& x) { return x.is_zero(); });
}

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field k, std::size_t rows, std::size_t cols)
      : k_(std::move(k)), rows_(rows), cols_(cols), data_(rows * cols, k_.zero()) {}

  static Matrix identity(const Field& k, std::size_t n) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
  }
  static Matrix from_columns(const Field& k, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(k, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }
  /// Reshape a flat row-major vector.
  static Matrix from_flat(const Field& k, std::size_t rows, std::size_t cols, const Vec& flat) {
    Matrix m(k, rows, cols);
    std::copy(flat.begin(), flat.end(), m.data_.begin());
    return m;
  }

  const Field& field() const { return k_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const Vec& flat() const { return data_; }

  Vec column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void set_column(std::size_t j, const Vec& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(k_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const { return sesq::is_zero(data_); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::BadDimension, "matrix product shape");
    Matrix c(a.k_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Elem& x = a(i, l);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
      }
    return c;
  }
  friend Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::BadDimension, "matrix-vector shape");
    Vec out = zero_vec(a.k_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const Elem& c, Matrix a) {
    for (auto& x : a.data_) x = c * x;
    return a;
  }
  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  struct Echelon;

  /// Reduced row echelon form; pivots are the first nonzero entries.
  Echelon rref() const;

  std::size_t rank() const;
  bool invertible() const;
  Matrix inverse() const;

  Elem determinant() const {
    if (!square()) throw Error(ErrorKind::BadDimension, "determinant of non-square matrix");
    Matrix m = *this;
    Elem det = k_.one();
    for (std::size_t c = 0; c < rows_; ++c) {
      std::size_t sel = c;
      while (sel < rows_ && m(sel, c).is_zero()) ++sel;
      if (sel == rows_) return k_.zero();
      if (sel != c) {
        m.swap_rows(c, sel);
        det = -det;
      }
      det *= m(c, c);
      const Elem inv = m(c, c).inv();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        const Elem f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  /// Echelon-canonical nullspace basis: one vector per free column, in
  /// increasing column order, with 1 at its free column and 0 at the others.
  std::vector<Vec> nullspace() const;

  /// Some solution of this * x = b, or nullopt.
  std::optional<Vec> solve(const Vec& b) const;

  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    const Field& k = a.rows_ + a.cols_ > 0 ? a.k_ : b.k_;
    Matrix m(k, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).to_string();
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  Field k_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void check_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::BadDimension, "shape mismatch");
  }
};

struct Matrix::Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Matrix::Echelon Matrix::rref() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && m(sel, c).is_zero()) ++sel;
    if (sel == rows_) continue;
    m.swap_rows(r, sel);
    const Elem inv = m(r, c).inv();
    for (std::size_t j = c; j < cols_; ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Elem f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t Matrix::rank() const { return rref().pivots.size(); }

inline bool Matrix::invertible() const { return square() && rank() == rows_; }

inline Matrix Matrix::inverse() const {
  if (!square()) throw Error(ErrorKind::NotInvertible, "non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return *this;
  Matrix aug(k_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = k_.one();
  }
  auto e = aug.rref();
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::NotInvertible);
  Matrix inv(k_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline std::vector<Vec> Matrix::nullspace() const {
  auto [r, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(k_, cols_);
    v[f] = k_.one();
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<Vec> Matrix::solve(const Vec& b) const {
  Matrix aug(k_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto [r, pivots] = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x = zero_vec(k_, cols_);
  for (std::size_t row = 0; row < pivots.size(); ++row) x[pivots[row]] = r(row, cols_);
  return x;
}

/// Linear span of independent vectors with exact coordinate extraction.
class Span {
 public:
  Span() = default;
  Span(Field k, std::size_t ambient, std::vector<Vec> basis)
      : k_(std::move(k)), ambient_(ambient), basis_(std::move(basis)) {
    const std::size_t r = basis_.size();
    if (r == 0) return;
    // Rows of B^T in echelon form locate r coordinates on which B is invertible.
    Matrix bt(k_, r, ambient_);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < ambient_; ++j) bt(i, j) = basis_[i][j];
    auto e = bt.rref();
    if (e.pivots.size() != r) throw Error(ErrorKind::BadDimension, "dependent basis");
    rows_ = e.pivots;
    Matrix sub(k_, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub(i, j) = basis_[j][rows_[i]];
    sub_inv_ = sub.inverse();
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const Field& field() const { return k_; }

  /// Coordinates of v in the basis, or nullopt if v is outside the span.
  std::optional<Vec> try_coords(const Vec& v) const {
    const std::size_t r = basis_.size();
    Vec sub(r, k_.zero());
    for (std::size_t i = 0; i < r; ++i) sub[i] = v[rows_[i]];
    Vec c = r ? sub_inv_ * sub : Vec{};
    if (combine(c) != v) return std::nullopt;
    return c;
  }
  Vec coords(const Vec& v) const {
    auto c = try_coords(v);
    if (!c) throw Error(ErrorKind::BadDimension, "vector outside span");
    return *c;
  }
  bool contains(const Vec& v) const { return try_coords(v).has_value(); }

  Vec combine(const Vec& c) const {
    Vec out = zero_vec(k_, ambient_);
    for (std::size_t m = 0; m < basis_.size(); ++m) {
      if (c[m].is_zero()) continue;
      for (std::size_t i = 0; i < ambient_; ++i) out[i] += c[m] * basis_[m][i];
    }
    return out;
  }

 private:
  Field k_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> rows_;
  Matrix sub_inv_;
};

/// Row-reduced basis of the span of arbitrary vectors (echelon-canonical).
inline std::vector<Vec> span_basis(const Field& k, std::size_t ambient, const std::vector<Vec>& vs) {
  if (vs.empty()) return {};
  Matrix m(k, vs.size(), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vs[i][j];
  auto e = m.rref();
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Vec row(ambient, k.zero());
    for (std::size_t j = 0; j < ambient; ++j) row[j] = e.reduced(r, j);
    out.push_back(std::move(row));
  }
  return out;
}

/// Iterates all vectors of F_q^n in canonical order: the first coordinate
/// is the most significant digit, digits follow the field enumeration.
class FiniteSweep {
 public:
  FiniteSweep(const Field& k, std::size_t n) : k_(k), digits_(n, 0), v_(n, k.zero()) {
    if (!k.finite()) throw Error(ErrorKind::InfiniteField);
  }
  const Vec& current() const { return v_; }
  /// Advances; false after the last vector.
  bool next() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < k_.order()) {
        v_[i] = k_.element(digits_[i]);
        return true;
      }
      digits_[i] = 0;
      v_[i] = k_.zero();
    }
    return false;
  }

 private:
  Field k_;
  std::vector<std::uint64_t> digits_;
  Vec v_;
};

/// q^n, or nullopt if it exceeds `cap` (or the field is infinite).
inline std::optional<std::uint64_t> sweep_size(const Field& k, std::size_t n, std::uint64_t cap) {
  if (!k.finite()) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / k.order()) return std::nullopt;
    total *= k.order();
  }
  return total <= cap ? std::optional<std::uint64_t>(total) : std::nullopt;
}

}  // namespace sesq
