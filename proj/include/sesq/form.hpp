#pragma once

// Sesquilinear forms s(xa, yb) = sigma(a) s(x, y) b stored as Gram arrays
// G[i][j] = s(e_i, e_j) (row index = first argument).

#include <cstdint>
#include <span>
#include <vector>

#include "sesq/module.hpp"
#include "sesq/random.hpp"

namespace sesq {

/// n x n array of algebra elements.
class Gram {
 public:
  Gram() = default;
  Gram(std::size_t n, const Vec& fill) : n_(n), e_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Vec& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Vec& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  const std::vector<Vec>& entries() const { return e_; }

  friend bool operator==(const Gram&, const Gram&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vec> e_;
};

inline Gram zero_gram(const InvAlgebra& a, std::size_t n) { return Gram(n, a.zero()); }

/// Gram array over A = k from a k-matrix (entries are scalar multiples of 1).
inline Gram scalar_gram(const InvAlgebra& a, const Matrix& m) {
  Gram g = zero_gram(a, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = a.scalar(m(i, j));
  return g;
}

struct SesqForm {
  ModulePtr module;
  Gram gram;
};

/// Several forms on one module; isometries must transport every member.
struct SesqSystem {
  ModulePtr module;
  std::vector<Gram> grams;
};

inline SesqSystem as_system(const SesqForm& s) { return {s.module, {s.gram}}; }

/// Whether G satisfies both compatibility families on V.
inline bool is_sesquilinear(const RightModule& v, const Gram& g) {
  const InvAlgebra& a = v.alg();
  const std::size_t n = v.dim();
  if (g.size() != n) return false;
  for (const auto& e : g.entries())
    if (e.size() != a.dim()) return false;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const Matrix& r = v.action(b);
    const Vec sb = a.sigma(a.basis(b));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec right = a.zero(), left = a.zero();
        for (std::size_t m = 0; m < n; ++m) {
          if (!r(m, j).is_zero())
            for (std::size_t t = 0; t < a.dim(); ++t) right[t] += r(m, j) * g(i, m)[t];
          if (!r(m, i).is_zero())
            for (std::size_t t = 0; t < a.dim(); ++t) left[t] += r(m, i) * g(m, j)[t];
        }
        if (right != a.mul(g(i, j), a.basis(b))) return false;
        if (left != a.mul(sb, g(i, j))) return false;
      }
  }
  return true;
}

inline SesqForm form_validate(ModulePtr v, Gram g) {
  if (g.size() != v->dim()) throw Error(ErrorKind::NotSesquilinear, "Gram size != module dim");
  for (auto& e : g.entries())
    for (auto& x : e) v->field().make(x);
  if (!is_sesquilinear(*v, g)) throw Error(ErrorKind::NotSesquilinear);
  return {std::move(v), std::move(g)};
}

inline SesqSystem system_validate(ModulePtr v, std::vector<Gram> grams) {
  for (const auto& g : grams) form_validate(v, g);
  return {std::move(v), std::move(grams)};
}

/// s(x, y) for coordinate vectors x, y.
inline Vec evaluate(const InvAlgebra& a, const Gram& g, const Vec& x, const Vec& y) {
  Vec out = a.zero();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (y[j].is_zero()) continue;
      const Elem c = x[i] * y[j];
      for (std::size_t t = 0; t < a.dim(); ++t) out[t] += c * g(i, j)[t];
    }
  }
  return out;
}

/// H[i][j] = s'(phi e_i, phi e_j) for a k-matrix phi : V -> V'.
inline Gram pullback(const InvAlgebra& a, const Gram& g, const Matrix& phi) {
  const std::size_t n = phi.cols(), m = phi.rows();
  std::vector<Vec> tmp(m * n, a.zero());  // tmp[p][j] = sum_q phi[q][j] g(p, q)
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t j = 0; j < n; ++j) {
        if (phi(q, j).is_zero()) continue;
        for (std::size_t t = 0; t < a.dim(); ++t) tmp[p * n + j][t] += phi(q, j) * g(p, q)[t];
      }
  Gram h = zero_gram(a, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      if (phi(p, i).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < a.dim(); ++t) h(i, j)[t] += phi(p, i) * tmp[p * n + j][t];
    }
  return h;
}

/// H[i][j] = s(X e_i, Y e_j) for k-matrices X, Y with dim V rows.
inline Gram cross_gram(const InvAlgebra& a, const Gram& g, const Matrix& x, const Matrix& y) {
  const std::size_t n = x.cols(), m = x.rows();
  Gram h = zero_gram(a, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      for (std::size_t p = 0; p < m; ++p) {
        if (x(p, i).is_zero()) continue;
        for (std::size_t q = 0; q < m; ++q) {
          if (y(q, j).is_zero()) continue;
          const Elem c = x(p, i) * y(q, j);
          for (std::size_t t = 0; t < a.dim(); ++t) h(i, j)[t] += c * g(p, q)[t];
        }
      }
  return h;
}

/// x, y -> sigma(s(y, x)).
inline Gram sigma_transpose(const InvAlgebra& a, const Gram& g) {
  Gram t = zero_gram(a, g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) t(i, j) = a.sigma(g(j, i));
  return t;
}

/// Matrix of s_l : V -> V*, s_l(x)(y) = s(x, y). Column i is s_l(e_i).
inline ModuleHom left_adjoint(const ModulePtr& v, const Gram& g) {
  const InvAlgebra& a = v->alg();
  const DualModule& d = v->dual();
  Matrix m(a.field(), d.module->dim(), v->dim());
  for (std::size_t i = 0; i < v->dim(); ++i) {
    Matrix f(a.field(), a.dim(), v->dim());
    for (std::size_t j = 0; j < v->dim(); ++j) f.set_column(j, g(i, j));
    m.set_column(i, d.coords(f));
  }
  return {v, d.module, std::move(m)};
}
inline ModuleHom left_adjoint(const SesqForm& s) { return left_adjoint(s.module, s.gram); }

/// Matrix of s_r : V -> V*, s_r(x)(y) = sigma(s(y, x)).
inline ModuleHom right_adjoint(const ModulePtr& v, const Gram& g) {
  return left_adjoint(v, sigma_transpose(v->alg(), g));
}
inline ModuleHom right_adjoint(const SesqForm& s) { return right_adjoint(s.module, s.gram); }

/// Inverse of left_adjoint: the Gram array whose s_l has matrix `l`.
inline Gram gram_from_left_adjoint(const ModulePtr& v, const Matrix& l) {
  const InvAlgebra& a = v->alg();
  const DualModule& d = v->dual();
  Gram g = zero_gram(a, v->dim());
  for (std::size_t i = 0; i < v->dim(); ++i) {
    const Matrix f = d.functional(l.column(i));
    for (std::size_t j = 0; j < v->dim(); ++j) g(i, j) = f.column(j);
  }
  return g;
}

inline bool unimodular_check(const ModulePtr& v, const Gram& g) {
  const Matrix l = left_adjoint(v, g).matrix;
  return l.square() && (l.rows() == 0 || l.invertible());
}
inline bool unimodular_check(const SesqForm& s) { return unimodular_check(s.module, s.gram); }

inline Gram gram_block_sum(const InvAlgebra& a, const Gram& g, const Gram& h) {
  const std::size_t n = g.size(), m = h.size();
  Gram out = zero_gram(a, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = g(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = h(i, j);
  return out;
}

inline SesqForm orth_sum(const SesqForm& s, const SesqForm& t) {
  if (!same_algebra(*s.module, *t.module)) throw Error(ErrorKind::AlgebraMismatch);
  return {direct_sum(s.module, t.module), gram_block_sum(s.module->alg(), s.gram, t.gram)};
}

inline SesqSystem orth_sum(const SesqSystem& s, const SesqSystem& t) {
  if (!same_algebra(*s.module, *t.module)) throw Error(ErrorKind::AlgebraMismatch);
  if (s.grams.size() != t.grams.size()) throw Error(ErrorKind::BadDimension, "system sizes differ");
  SesqSystem out{direct_sum(s.module, t.module), {}};
  for (std::size_t i = 0; i < s.grams.size(); ++i)
    out.grams.push_back(gram_block_sum(s.module->alg(), s.grams[i], t.grams[i]));
  return out;
}

/// Restriction of s to a submodule given by a basis (coordinates of the
/// returned form are relative to that basis).
inline SesqForm restrict_form(const SesqForm& s, const std::vector<Vec>& basis) {
  ModulePtr sub = submodule(s.module, basis);
  const Matrix inc = Matrix::from_columns(s.module->field(), s.module->dim(), basis);
  return {sub, basis.empty() ? Gram() : pullback(s.module->alg(), s.gram, inc)};
}

/// s(x, y) := s(P^{-1} x, P^{-1} y) on the module with coordinates x' = P x,
/// so that P is an isometry from s onto the result.
inline SesqForm transport(const SesqForm& s, const Matrix& p) {
  ModulePtr w = change_basis(s.module, p);
  return {w, pullback(s.module->alg(), s.gram, p.inverse())};
}

// Scalar extension ----------------------------------------------------------

inline ModulePtr module_extend(const ModulePtr& v, const AlgebraPtr& ext) {
  std::vector<Matrix> action;
  for (const auto& r : v->action()) action.push_back(embed_matrix(v->field(), ext->field(), r));
  if (v->dim() == 0) return zero_module(ext);
  return module_validate(ext, v->dim(), std::move(action));
}

inline Gram gram_extend(const Field& src, const Field& dst, const Gram& g) {
  Gram out = g;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out(i, j) = embed_vec(src, dst, g(i, j));
  return out;
}

inline SesqSystem form_extend(const SesqSystem& s, const Field& dst) {
  const Field& src = s.module->field();
  if (!can_embed(src, dst)) throw Error(ErrorKind::NoEmbedding, src.name() + " -> " + dst.name());
  AlgebraPtr ext = algebra_extend(s.module->alg(), dst);
  SesqSystem out{module_extend(s.module, ext), {}};
  for (const auto& g : s.grams) out.grams.push_back(gram_extend(src, dst, g));
  return out;
}

inline SesqForm form_extend(const SesqForm& s, const Field& dst) {
  auto sys = form_extend(as_system(s), dst);
  return {sys.module, sys.grams[0]};
}

// Isometry criteria ---------------------------------------------------------

/// phi : V -> V' is an A-isomorphism with s'(phi x, phi y) = s(x, y) for
/// every member.
inline bool is_isometry(const SesqSystem& s, const SesqSystem& t, const Matrix& phi) {
  if (phi.rows() != t.module->dim() || phi.cols() != s.module->dim()) return false;
  if (s.grams.size() != t.grams.size()) return false;
  if (!intertwines(*s.module, *t.module, phi)) return false;
  if (phi.rows() > 0 && !phi.invertible()) return false;
  for (std::size_t m = 0; m < s.grams.size(); ++m)
    if (pullback(s.module->alg(), t.grams[m], phi) != s.grams[m]) return false;
  return true;
}

/// The adjoint form of the same criterion: s_l = phi* s'_l phi.
inline bool is_isometry_adjoint(const SesqSystem& s, const SesqSystem& t, const Matrix& phi) {
  if (phi.rows() != t.module->dim() || phi.cols() != s.module->dim()) return false;
  if (s.grams.size() != t.grams.size()) return false;
  if (!intertwines(*s.module, *t.module, phi)) return false;
  if (phi.rows() > 0 && !phi.invertible()) return false;
  const ModuleHom f{s.module, t.module, phi};
  const ModuleHom fstar = dual_hom(f);
  for (std::size_t m = 0; m < s.grams.size(); ++m) {
    const Matrix sl = left_adjoint(s.module, s.grams[m]).matrix;
    const Matrix tl = left_adjoint(t.module, t.grams[m]).matrix;
    if (fstar.matrix * tl * phi != sl) return false;
  }
  return true;
}

// Random forms --------------------------------------------------------------

/// Basis of the k-space of sesquilinear Gram arrays on V (flattened as
/// entries (i, j, t) at (i*n + j)*d + t), in echelon-canonical order.
inline std::vector<Vec> form_space(const RightModule& v) {
  const InvAlgebra& a = v.alg();
  const Field& k = a.field();
  const std::size_t n = v.dim(), d = a.dim();
  const std::size_t unknowns = n * n * d;
  if (unknowns == 0) return {};
  auto idx = [&](std::size_t i, std::size_t j, std::size_t t) { return (i * n + j) * d + t; };
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < d; ++b) {
    const Matrix& r = v.action(b);
    const Matrix rb = a.right_mult_basis(b);                 // y -> y b
    const Matrix lsb = a.left_mult(a.sigma(a.basis(b)));     // y -> sigma(b) y
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < d; ++t) {
          Vec right = zero_vec(k, unknowns), left = zero_vec(k, unknowns);
          for (std::size_t m = 0; m < n; ++m) {
            right[idx(i, m, t)] += r(m, j);
            left[idx(m, j, t)] += r(m, i);
          }
          for (std::size_t u = 0; u < d; ++u) {
            right[idx(i, j, u)] -= rb(t, u);
            left[idx(i, j, u)] -= lsb(t, u);
          }
          rows.push_back(std::move(right));
          rows.push_back(std::move(left));
        }
  }
  Matrix sys(k, rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];
  return sys.nullspace();
}

inline Gram gram_from_flat(const InvAlgebra& a, std::size_t n, const Vec& flat) {
  Gram g = zero_gram(a, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < a.dim(); ++t) g(i, j)[t] = flat[(i * n + j) * a.dim() + t];
  return g;
}

/// Uniform sample from the solution space, deterministic per seed. With
/// `require_unimodular`, redraws until s_l is bijective.
inline SesqForm random_form(const ModulePtr& v, std::uint64_t seed, bool require_unimodular = false,
                            std::size_t max_tries = 1000) {
  const InvAlgebra& a = v->alg();
  const auto basis = form_space(*v);
  const Span space(a.field(), v->dim() * v->dim() * a.dim(), basis);
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(max_tries, 1); ++attempt) {
    const Vec c = rng.vec(a.field(), basis.size());
    Gram g = gram_from_flat(a, v->dim(), space.combine(c));
    if (!require_unimodular || unimodular_check(v, g)) return form_validate(v, std::move(g));
  }
  throw Error(ErrorKind::NoUnimodularFound, std::to_string(max_tries) + " tries");
}

// G-bilinear forms ------------------------------------------------------------

/// k-valued form on a module over a group ring with b(xg, yg) = b(x, y).
struct GBilinearForm {
  ModulePtr module;
  Matrix gram;
};

inline const Group& require_group(const InvAlgebra& a) {
  if (!a.group()) throw Error(ErrorKind::NotAGroupRing);
  return *a.group();
}

inline bool is_invariant(const RightModule& v, const Matrix& b) {
  const Group& g = require_group(v.alg());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (v.action(x).transpose() * b * v.action(x) != b) return false;
  return true;
}

inline GBilinearForm gbilinear_validate(ModulePtr v, Matrix b) {
  if (b.rows() != v->dim() || b.cols() != v->dim())
    throw Error(ErrorKind::NotInvariant, "Gram size != module dim");
  if (!is_invariant(*v, b)) throw Error(ErrorKind::NotInvariant);
  return {std::move(v), std::move(b)};
}

/// S(x, y) = sum_g b(x g, y) g.
inline SesqForm gbilinear_to_sesq(const GBilinearForm& b) {
  const RightModule& v = *b.module;
  const Group& grp = require_group(v.alg());
  if (!is_invariant(v, b.gram)) throw Error(ErrorKind::NotInvariant);
  const std::size_t n = v.dim();
  Gram s = zero_gram(v.alg(), n);
  for (std::size_t g = 0; g < grp.order(); ++g) {
    const Matrix c = v.action(g).transpose() * b.gram;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j)[g] = c(i, j);
  }
  return form_validate(b.module, std::move(s));
}

/// P o S, where P reads the coefficient of the identity element.
inline GBilinearForm sesq_to_gbilinear(const SesqForm& s) {
  const Group& grp = require_group(s.module->alg());
  const std::size_t n = s.module->dim();
  Matrix b(s.module->field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = s.gram(i, j)[grp.unit];
  return gbilinear_validate(s.module, std::move(b));
}

/// Basis of G-invariant k-bilinear forms on V.
inline std::vector<Matrix> invariant_space(const RightModule& v) {
  const Group& grp = require_group(v.alg());
  const Field& k = v.field();
  const std::size_t n = v.dim();
  if (n == 0) return {};
  Matrix sys(k, grp.order() * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t g = 0; g < grp.order(); ++g) {
    const Matrix& r = v.action(g);
    // (R^T B R)[i][j] - B[i][j] = sum_{p,q} R[p][i] R[q][j] B[p][q] - B[i][j]
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) sys(row, p * n + q) += r(p, i) * r(q, j);
        sys(row, i * n + j) -= k.one();
      }
  }
  std::vector<Matrix> out;
  for (const auto& x : sys.nullspace()) out.push_back(Matrix::from_flat(k, n, n, x));
  return out;
}

inline GBilinearForm random_gbilinear(const ModulePtr& v, std::uint64_t seed) {
  const auto basis = invariant_space(*v);
  Rng rng(seed);
  Matrix b(v->field(), v->dim(), v->dim());
  for (const auto& m : basis) b += rng.element(v->field()) * m;
  return gbilinear_validate(v, std::move(b));
}

}  // namespace sesq
