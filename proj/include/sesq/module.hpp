#pragma once

// Right modules over an InvAlgebra, presented as k-spaces with action
// matrices. Coordinates are columns; x * a_i has coordinates R_i x.

#include <memory>
#include <mutex>
#include <vector>

#include "sesq/algebra.hpp"

namespace sesq {

class RightModule;
using ModulePtr = std::shared_ptr<const RightModule>;

/// V* = Hom_A(V, A) with (f.a)(x) = sigma(a) f(x). Each basis functional
/// is stored as a dim(A) x dim(V) matrix.
struct DualModule {
  ModulePtr module;
  const RightModule* base = nullptr;
  std::vector<Matrix> functionals;
  Span span;  // functionals flattened row-major

  Vec coords(const Matrix& f) const { return span.coords(f.flat()); }
  Matrix functional(const Vec& c) const;
};

class RightModule {
 public:
  RightModule(AlgebraPtr alg, std::size_t n, std::vector<Matrix> action)
      : alg_(std::move(alg)), n_(n), action_(std::move(action)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const InvAlgebra& alg() const { return *alg_; }
  const Field& field() const { return alg_->field(); }
  std::size_t dim() const { return n_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }

  /// Matrix of x -> x * a.
  Matrix act(const Vec& a) const {
    Matrix r(field(), n_, n_);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) r += a[i] * action_[i];
    return r;
  }

  /// Lazily computed dual, shared by every caller.
  const DualModule& dual() const;

 private:
  AlgebraPtr alg_;
  std::size_t n_;
  std::vector<Matrix> action_;
  mutable std::once_flag dual_once_;
  mutable std::unique_ptr<DualModule> dual_;
};

struct ModuleHom {
  ModulePtr source, target;
  Matrix matrix;  // dim(target) x dim(source)
};

inline bool same_algebra(const RightModule& v, const RightModule& w) {
  return same_algebra(v.alg(), w.alg());
}

inline ModulePtr module_validate(AlgebraPtr alg, std::size_t n, std::vector<Matrix> action) {
  const InvAlgebra& a = *alg;
  const Field& k = a.field();
  if (action.size() != a.dim()) throw Error(ErrorKind::NotAModule, "one action matrix per basis element");
  for (auto& r : action) {
    if (r.rows() != n || r.cols() != n) throw Error(ErrorKind::NotAModule, "action shape");
    if (n > 0 && !(r.field() == k)) throw Error(ErrorKind::ContextMismatch);
  }
  if (n == 0)
    for (auto& r : action) r = Matrix(k, 0, 0);
  auto v = std::make_shared<RightModule>(std::move(alg), n, std::move(action));
  if (v->act(a.unit()) != Matrix::identity(k, n)) throw Error(ErrorKind::NotAModule, "unit acts nontrivially");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (v->act(a.product(i, j)) != v->action(j) * v->action(i))
        throw Error(ErrorKind::NotAModule, "R(a_i a_j) != R_j R_i at (" + std::to_string(i) + "," +
                                               std::to_string(j) + ")");
  return v;
}

inline ModulePtr regular_module(const AlgebraPtr& alg) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < alg->dim(); ++i) action.push_back(alg->right_mult_basis(i));
  return module_validate(alg, alg->dim(), std::move(action));
}

inline ModulePtr zero_module(const AlgebraPtr& alg) {
  return module_validate(alg, 0, std::vector<Matrix>(alg->dim()));
}

/// k^n over A = k (or any algebra acting through scalars of the unit).
inline ModulePtr free_base_module(const AlgebraPtr& alg, std::size_t n) {
  if (alg->dim() != 1) throw Error(ErrorKind::BadDimension, "free_base_module needs dim A = 1");
  const Elem u = alg->unit()[0].inv();
  return module_validate(alg, n, {u * Matrix::identity(alg->field(), n)});
}

/// One-dimensional module where basis element i acts by values[i].
inline ModulePtr scalar_module(const AlgebraPtr& alg, const Vec& values) {
  std::vector<Matrix> action;
  for (const auto& x : values) {
    Matrix m(alg->field(), 1, 1);
    m(0, 0) = x;
    action.push_back(std::move(m));
  }
  return module_validate(alg, 1, std::move(action));
}

/// The trivial module of a group ring: every g acts as 1.
inline ModulePtr trivial_module(const AlgebraPtr& alg) {
  if (!alg->group()) throw Error(ErrorKind::NotAGroupRing);
  return scalar_module(alg, Vec(alg->dim(), alg->field().one()));
}

/// Row vectors k^n over M_n(k): x . E_ij = x_i e_j.
inline ModulePtr row_module(const AlgebraPtr& alg, std::size_t n) {
  if (alg->dim() != n * n) throw Error(ErrorKind::BadDimension, "row_module needs M_n(k)");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix r(alg->field(), n, n);
      r(j, i) = alg->field().one();
      action.push_back(std::move(r));
    }
  return module_validate(alg, n, std::move(action));
}

/// Same module in new coordinates: x' = P x.
inline ModulePtr change_basis(const ModulePtr& v, const Matrix& p) {
  const Matrix pinv = p.inverse();
  std::vector<Matrix> action;
  for (const auto& r : v->action()) action.push_back(p * r * pinv);
  return module_validate(v->algebra(), v->dim(), std::move(action));
}

inline ModulePtr direct_sum(const ModulePtr& v, const ModulePtr& w) {
  if (!same_algebra(*v, *w)) throw Error(ErrorKind::AlgebraMismatch);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < v->alg().dim(); ++i)
    action.push_back(Matrix::block_diag(v->action(i), w->action(i)));
  if (v->dim() + w->dim() == 0) return zero_module(v->algebra());
  return module_validate(v->algebra(), v->dim() + w->dim(), std::move(action));
}

/// Submodule spanned by `basis` (which must be closed under the action),
/// in the coordinates of that basis.
inline ModulePtr submodule(const ModulePtr& v, const std::vector<Vec>& basis) {
  if (basis.empty()) return zero_module(v->algebra());
  Span s(v->field(), v->dim(), basis);
  std::vector<Matrix> action;
  for (const auto& r : v->action()) {
    Matrix m(v->field(), s.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
      auto c = s.try_coords(r * basis[j]);
      if (!c) throw Error(ErrorKind::NotAModule, "span is not a submodule");
      m.set_column(j, *c);
    }
    action.push_back(std::move(m));
  }
  return module_validate(v->algebra(), s.dim(), std::move(action));
}

/// Echelon-canonical k-basis of Hom_A(V, W), each a dim(W) x dim(V) matrix.
inline std::vector<Matrix> hom_space(const RightModule& v, const RightModule& w) {
  if (!same_algebra(v, w)) throw Error(ErrorKind::AlgebraMismatch);
  const Field& k = v.field();
  const std::size_t nv = v.dim(), nw = w.dim(), d = v.alg().dim();
  const std::size_t unknowns = nv * nw;
  if (unknowns == 0) return {};
  // T R_i^V - R_i^W T = 0, unknown T[r][c] at r*nv + c.
  Matrix sys(k, d * nw * nv, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& rv = v.action(i);
    const Matrix& rw = w.action(i);
    for (std::size_t r = 0; r < nw; ++r)
      for (std::size_t c = 0; c < nv; ++c, ++row) {
        for (std::size_t l = 0; l < nv; ++l) sys(row, r * nv + l) += rv(l, c);
        for (std::size_t l = 0; l < nw; ++l) sys(row, l * nv + c) -= rw(r, l);
      }
  }
  std::vector<Matrix> out;
  for (const auto& x : sys.nullspace()) out.push_back(Matrix::from_flat(k, nw, nv, x));
  return out;
}

inline bool intertwines(const RightModule& v, const RightModule& w, const Matrix& t) {
  if (t.rows() != w.dim() || t.cols() != v.dim()) return false;
  for (std::size_t i = 0; i < v.alg().dim(); ++i)
    if (t * v.action(i) != w.action(i) * t) return false;
  return true;
}

inline Matrix DualModule::functional(const Vec& c) const {
  const InvAlgebra& a = base->alg();
  return Matrix::from_flat(a.field(), a.dim(), base->dim(), span.combine(c));
}

namespace detail {

inline std::unique_ptr<DualModule> compute_dual(const RightModule& v) {
  const InvAlgebra& a = v.alg();
  const Field& k = a.field();
  auto dm = std::make_unique<DualModule>();
  dm->base = &v;
  // Hom_A(V, A_A): build A_A's action directly to avoid a second algebra handle.
  std::vector<Matrix> reg;
  for (std::size_t i = 0; i < a.dim(); ++i) reg.push_back(a.right_mult_basis(i));
  RightModule regular(v.algebra(), a.dim(), reg);
  dm->functionals = hom_space(v, regular);
  std::vector<Vec> flat;
  for (const auto& f : dm->functionals) flat.push_back(f.flat());
  dm->span = Span(k, a.dim() * v.dim(), flat);
  const std::size_t r = dm->functionals.size();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix lsig = a.left_mult(a.sigma(a.basis(i)));
    Matrix m(k, r, r);
    for (std::size_t t = 0; t < r; ++t) m.set_column(t, dm->coords(lsig * dm->functionals[t]));
    action.push_back(std::move(m));
  }
  dm->module = module_validate(v.algebra(), r, std::move(action));
  return dm;
}

}  // namespace detail

inline const DualModule& RightModule::dual() const {
  std::call_once(dual_once_, [this] { dual_ = detail::compute_dual(*this); });
  return *dual_;
}

inline const DualModule& dual_module(const ModulePtr& v) { return v->dual(); }

/// e_V : V -> V**, e_V(x)(f) = sigma(f(x)), in the stored functional bases.
inline ModuleHom double_dual_map(const ModulePtr& v) {
  const InvAlgebra& a = v->alg();
  const Field& k = a.field();
  const DualModule& d1 = v->dual();
  const DualModule& d2 = d1.module->dual();
  const std::size_t r = d1.functionals.size();
  Matrix e(k, d2.module->dim(), v->dim());
  for (std::size_t j = 0; j < v->dim(); ++j) {
    Matrix ev(k, a.dim(), r);
    for (std::size_t t = 0; t < r; ++t) ev.set_column(t, a.sigma(d1.functionals[t].column(j)));
    e.set_column(j, d2.coords(ev));
  }
  ModuleHom h{v, d2.module, std::move(e)};
  if (!intertwines(*v, *d2.module, h.matrix))
    throw Error(ErrorKind::NotAMorphism, "e_V is not A-linear");
  return h;
}

inline bool reflexive_check(const ModulePtr& v) {
  const Matrix& e = double_dual_map(v).matrix;
  return e.square() && (e.rows() == 0 || e.invertible());
}

/// T* : W* -> V*, (T* f)(x) = f(T x).
inline ModuleHom dual_hom(const ModuleHom& t) {
  const DualModule& dv = t.source->dual();
  const DualModule& dw = t.target->dual();
  Matrix m(t.source->field(), dv.module->dim(), dw.module->dim());
  for (std::size_t s = 0; s < dw.functionals.size(); ++s)
    m.set_column(s, dv.coords(dw.functionals[s] * t.matrix));
  return {dw.module, dv.module, std::move(m)};
}

inline ModuleHom identity_hom(const ModulePtr& v) {
  return {v, v, Matrix::identity(v->field(), v->dim())};
}

inline ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner) {
  return {inner.source, outer.target, outer.matrix * inner.matrix};
}

}  // namespace sesq
