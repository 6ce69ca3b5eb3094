#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sesq/matrix.hpp"

namespace sesq {

/// Finite group by multiplication table: table[a][b] is the index of a*b.
struct Group {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  std::size_t unit = 0;
  std::vector<std::size_t> inverse;

  std::size_t order() const { return names.size(); }
  friend bool operator==(const Group&, const Group&) = default;
};

inline Group make_group(std::vector<std::string> names,
                        std::vector<std::vector<std::size_t>> table, std::size_t unit) {
  const std::size_t n = names.size();
  if (n == 0 || table.size() != n || unit >= n) throw Error(ErrorKind::NotAGroup, "shape");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::NotAGroup, "shape");
    for (auto x : row)
      if (x >= n) throw Error(ErrorKind::NotAGroup, "entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[unit][a] != a || table[a][unit] != a) throw Error(ErrorKind::NotAGroup, "unit");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAGroup, "not associative");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == unit && table[b][a] == unit) inverse[a] = b;
  for (auto i : inverse)
    if (i == n) throw Error(ErrorKind::NotAGroup, "missing inverse");
  return {std::move(names), std::move(table), unit, std::move(inverse)};
}

inline Group cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return make_group(std::move(names), std::move(table), 0);
}

/// Structure data before validation.
struct AlgebraData {
  Field field;
  std::vector<std::string> basis;
  std::vector<std::vector<Vec>> structure;  // structure[i][j] = coords of a_i a_j
  Vec unit;
  Matrix involution;  // column i holds sigma(a_i)
  std::optional<Group> group;
};

/// A finite-dimensional algebra over a field with a k-linear involution.
/// Construct through algebra_validate (or the named constructors).
class InvAlgebra {
 public:
  const Field& field() const { return k_; }
  std::size_t dim() const { return d_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& product(std::size_t i, std::size_t j) const { return c_[i * d_ + j]; }
  const Vec& unit() const { return unit_; }
  const Matrix& involution() const { return inv_; }
  const std::optional<Group>& group() const { return group_; }

  Vec zero() const { return zero_vec(k_, d_); }
  Vec basis(std::size_t i) const {
    Vec v = zero();
    v[i] = k_.one();
    return v;
  }
  Vec scalar(const Elem& c) const {
    Vec v = unit_;
    for (auto& x : v) x = c * x;
    return v;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out = zero();
    for (std::size_t i = 0; i < d_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        if (y[j].is_zero()) continue;
        const Elem xy = x[i] * y[j];
        const Vec& p = product(i, j);
        for (std::size_t m = 0; m < d_; ++m)
          if (!p[m].is_zero()) out[m] += xy * p[m];
      }
    }
    return out;
  }
  Vec sigma(const Vec& x) const { return inv_ * x; }

  /// Matrix of y -> x*y.
  Matrix left_mult(const Vec& x) const {
    Matrix l(k_, d_, d_);
    for (std::size_t i = 0; i < d_; ++i)
      if (!x[i].is_zero()) l += x[i] * left_basis_[i];
    return l;
  }
  /// Matrix of x -> x*y.
  Matrix right_mult(const Vec& y) const {
    Matrix r(k_, d_, d_);
    for (std::size_t i = 0; i < d_; ++i)
      if (!y[i].is_zero()) r += y[i] * right_basis_[i];
    return r;
  }
  const Matrix& left_mult_basis(std::size_t i) const { return left_basis_[i]; }
  const Matrix& right_mult_basis(std::size_t i) const { return right_basis_[i]; }

  bool is_unit(const Vec& x) const { return left_mult(x).invertible(); }

  friend bool same_algebra(const InvAlgebra& a, const InvAlgebra& b) {
    return &a == &b || (a.k_ == b.k_ && a.d_ == b.d_ && a.c_ == b.c_ && a.unit_ == b.unit_ &&
                        a.inv_ == b.inv_);
  }

  friend std::shared_ptr<const InvAlgebra> algebra_validate(AlgebraData data);

 private:
  Field k_;
  std::size_t d_ = 0;
  std::vector<std::string> names_;
  std::vector<Vec> c_;
  Vec unit_;
  Matrix inv_;
  std::optional<Group> group_;
  std::vector<Matrix> left_basis_, right_basis_;
};

using AlgebraPtr = std::shared_ptr<const InvAlgebra>;

/// Checks associativity on basis triples, the two-sided unit, and that the
/// involution is an anti-automorphism of order two fixing the base field.
inline AlgebraPtr algebra_validate(AlgebraData data) {
  auto a = std::make_shared<InvAlgebra>();
  const Field& k = data.field;
  const std::size_t d = data.structure.size();
  if (d == 0) throw Error(ErrorKind::BadDimension, "algebra of dimension 0");
  if (data.unit.size() != d || data.involution.rows() != d || data.involution.cols() != d)
    throw Error(ErrorKind::BadDimension, "unit/involution shape");
  for (const auto& row : data.structure) {
    if (row.size() != d) throw Error(ErrorKind::BadDimension, "structure shape");
    for (const auto& v : row)
      if (v.size() != d) throw Error(ErrorKind::BadDimension, "structure shape");
  }
  if (data.basis.empty())
    for (std::size_t i = 0; i < d; ++i) data.basis.push_back("a" + std::to_string(i));
  if (data.basis.size() != d) throw Error(ErrorKind::BadDimension, "basis names");

  a->k_ = k;
  a->d_ = d;
  a->names_ = std::move(data.basis);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (auto& x : data.structure[i][j]) x = k.make(x);
      a->c_.push_back(data.structure[i][j]);
    }
  a->unit_ = data.unit;
  a->inv_ = data.involution;
  a->group_ = std::move(data.group);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l(k, d, d), r(k, d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t m = 0; m < d; ++m) {
        l(m, j) = a->product(i, j)[m];
        r(m, j) = a->product(j, i)[m];
      }
    a->left_basis_.push_back(std::move(l));
    a->right_basis_.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        if (a->mul(a->product(i, j), a->basis(l)) != a->mul(a->basis(i), a->product(j, l)))
          throw Error(ErrorKind::NotAssociative,
                      "(" + a->names_[i] + "," + a->names_[j] + "," + a->names_[l] + ")");
      }
  for (std::size_t i = 0; i < d; ++i) {
    if (a->mul(a->unit_, a->basis(i)) != a->basis(i) ||
        a->mul(a->basis(i), a->unit_) != a->basis(i))
      throw Error(ErrorKind::BadUnit, a->names_[i]);
  }
  if (a->inv_ * a->inv_ != Matrix::identity(k, d))
    throw Error(ErrorKind::NotInvolution, "sigma^2 != id");
  if (a->sigma(a->unit_) != a->unit_) throw Error(ErrorKind::NotInvolution, "sigma(1) != 1");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (a->sigma(a->product(i, j)) != a->mul(a->sigma(a->basis(j)), a->sigma(a->basis(i))))
        throw Error(ErrorKind::NotInvolution, "not anti-multiplicative");
  if (a->group_) {
    const Group& g = *a->group_;
    if (g.order() != d) throw Error(ErrorKind::NotAGroupRing, "group order != dim");
    for (std::size_t x = 0; x < d; ++x) {
      if (a->sigma(a->basis(x)) != a->basis(g.inverse[x]))
        throw Error(ErrorKind::NotAGroupRing, "involution is not g -> g^-1");
      for (std::size_t y = 0; y < d; ++y)
        if (a->product(x, y) != a->basis(g.table[x][y]))
          throw Error(ErrorKind::NotAGroupRing, "structure does not match group table");
    }
  }
  return a;
}

/// k itself, with the identity involution.
inline AlgebraPtr base_algebra(const Field& k) {
  return algebra_validate({k, {"1"}, {{{k.one()}}}, {k.one()}, Matrix::identity(k, 1), std::nullopt});
}

/// k[G] with the canonical involution g -> g^{-1}.
inline AlgebraPtr group_ring(const Field& k, const Group& g) {
  const std::size_t n = g.order();
  AlgebraData data{k, g.names, {}, zero_vec(k, n), Matrix(k, n, n), g};
  data.structure.assign(n, std::vector<Vec>(n, zero_vec(k, n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) data.structure[a][b][g.table[a][b]] = k.one();
  data.unit[g.unit] = k.one();
  for (std::size_t a = 0; a < n; ++a) data.involution(g.inverse[a], a) = k.one();
  return algebra_validate(std::move(data));
}

/// M_n(k) on matrix units E_ij (index i*n+j) with the transpose involution.
inline AlgebraPtr matrix_algebra(const Field& k, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadDimension, "n must be >= 1");
  const std::size_t d = n * n;
  AlgebraData data{k, {}, {}, zero_vec(k, d), Matrix(k, d, d), std::nullopt};
  data.structure.assign(d, std::vector<Vec>(d, zero_vec(k, d)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      data.basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      data.involution(j * n + i, i * n + j) = k.one();
      for (std::size_t l = 0; l < n; ++l) data.structure[i * n + j][j * n + l][i * n + l] = k.one();
    }
  for (std::size_t i = 0; i < n; ++i) data.unit[i * n + i] = k.one();
  return algebra_validate(std::move(data));
}

inline Vec embed_vec(const Field& src, const Field& dst, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(field_embed(src, dst, x));
  return out;
}

inline Matrix embed_matrix(const Field& src, const Field& dst, const Matrix& m) {
  Matrix out(dst, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field_embed(src, dst, m(i, j));
  return out;
}

/// A (x)_k L with sigma (x) id: same constants, entries embedded.
inline AlgebraPtr algebra_extend(const InvAlgebra& a, const Field& dst) {
  const Field& src = a.field();
  if (!can_embed(src, dst)) throw Error(ErrorKind::NoEmbedding, src.name() + " -> " + dst.name());
  const std::size_t d = a.dim();
  AlgebraData data{dst, a.basis_names(), {}, embed_vec(src, dst, a.unit()),
                   embed_matrix(src, dst, a.involution()), a.group()};
  data.structure.assign(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) data.structure[i][j] = embed_vec(src, dst, a.product(i, j));
  return algebra_validate(std::move(data));
}

}  // namespace sesq
