#pragma once

// Endomorphism rings of double-arrow objects, the involution induced by a
// unimodular hermitian form, and finite sweeps over units and classes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sesq/darrow.hpp"

namespace sesq {

/// Structure constants of an associative k-algebra, without involution.
struct MultTable {
  Field k;
  std::size_t d = 0;
  std::vector<Vec> c;  // c[i*d + j] = coords of b_i b_j
  Vec one;

  const Vec& unit() const { return one; }
  const Field& field() const { return k; }
  std::size_t dim() const { return d; }
  Vec zero() const { return zero_vec(k, d); }
  Vec mul(const Vec& x, const Vec& y) const {
    Vec out = zero();
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        const Elem xy = x[i] * y[j];
        for (std::size_t m = 0; m < d; ++m) out[m] += xy * c[i * d + j][m];
      }
    }
    return out;
  }
  Matrix left_mult(const Vec& x) const {
    Matrix l(k, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec e = zero();
      e[j] = k.one();
      l.set_column(j, mul(x, e));
    }
    return l;
  }
};

inline MultTable mult_table(const InvAlgebra& a) {
  MultTable t{a.field(), a.dim(), {}, a.unit()};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t.c.push_back(a.product(i, j));
  return t;
}

struct EndoRing {
  DoubleArrow object;
  std::vector<DAMorphism> basis;
  Span span;  // basis flattened as phi entries followed by psi entries
  MultTable table;
  std::optional<HermPair> eta0;
  AlgebraPtr algebra;  // set once the involution is known

  std::size_t dim() const { return basis.size(); }
  const Field& field() const { return table.k; }

  static Vec flatten(const DAMorphism& h) {
    Vec v = h.phi.flat();
    v.insert(v.end(), h.psi.flat().begin(), h.psi.flat().end());
    return v;
  }
  Vec coords(const DAMorphism& h) const { return span.coords(flatten(h)); }
  DAMorphism element(const Vec& c) const { return combine(basis, c, object, object); }
};

inline EndoRing endo_compute(const DoubleArrow& q0) {
  EndoRing e;
  e.object = q0;
  e.basis = morphism_space(q0, q0);
  const Field& k = q0.V->field();
  std::vector<Vec> flat;
  for (const auto& b : e.basis) flat.push_back(EndoRing::flatten(b));
  const std::size_t ambient = q0.V->dim() * q0.V->dim() + q0.W->dim() * q0.W->dim();
  e.span = Span(k, ambient, flat);
  e.table.k = k;
  e.table.d = e.basis.size();
  for (const auto& x : e.basis)
    for (const auto& y : e.basis) e.table.c.push_back(e.coords(da_compose(x, y)));
  e.table.one = e.coords(da_identity(q0));
  return e;
}

/// ~f = eta0^{-1} f* eta0; the result carries a validated InvAlgebra.
inline EndoRing induced_involution(EndoRing e, const HermPair& eta0) {
  if (!da_invertible(eta0)) throw Error(ErrorKind::NotUnimodular);
  const DoubleArrow& q = e.object;
  const DAMorphism eta_inv = da_inverse(eta0);
  const std::size_t d = e.dim();
  Matrix inv(e.field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const DAMorphism& f = e.basis[i];
    const DAMorphism fs = da_dual_morphism(q, q, f);  // (psi*, phi*)
    const DAMorphism tilde{eta_inv.phi * fs.phi * eta0.phi, eta_inv.psi * fs.psi * eta0.psi};
    auto c = e.span.try_coords(EndoRing::flatten(tilde));
    if (!c) throw Error(ErrorKind::NotInvolution, "~f leaves the endomorphism ring");
    inv.set_column(i, *c);
  }
  AlgebraData data{e.field(), {}, {}, e.table.one, inv, std::nullopt};
  data.structure.assign(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) data.structure[i][j] = e.table.c[i * d + j];
  for (std::size_t i = 0; i < d; ++i) data.basis.push_back("b" + std::to_string(i));
  e.eta0 = eta0;
  e.algebra = algebra_validate(std::move(data));
  return e;
}

/// Canonical sort key of a coordinate vector over a finite field.
inline std::vector<std::uint32_t> elem_key(const Vec& v) {
  std::vector<std::uint32_t> k;
  k.reserve(v.size());
  for (const auto& x : v) k.push_back(x.index());
  return k;
}

template <class Ring>
std::uint64_t require_enumerable(const Ring& r, std::uint64_t cap, std::size_t power = 1) {
  if (!r.field().finite()) throw Error(ErrorKind::InfiniteField);
  auto size = sweep_size(r.field(), r.dim() * power, cap);
  if (!size) throw Error(ErrorKind::EnumTooLarge, "q^" + std::to_string(r.dim() * power) + " exceeds cap");
  return *size;
}

template <class Ring>
std::vector<Vec> all_elements(const Ring& r, std::uint64_t cap) {
  require_enumerable(r, cap);
  std::vector<Vec> out;
  FiniteSweep sweep(r.field(), r.dim());
  do out.push_back(sweep.current());
  while (sweep.next());
  return out;
}

/// Invertible elements in canonical order (one-sided invertibility suffices
/// in a finite ring; tested through the left regular representation).
template <class Ring>
std::vector<Vec> units_enumerate(const Ring& r, std::uint64_t cap) {
  std::vector<Vec> out;
  for (auto& x : all_elements(r, cap))
    if (r.left_mult(x).invertible()) out.push_back(std::move(x));
  return out;
}

/// k-basis of the Jacobson radical. Finite fields: x is in rad iff 1 - a x
/// is invertible for every a (sweeps q^{2 dim} pairs, capped). Q: kernel of
/// the trace form (x, y) -> tr(L_x L_y).
template <class Ring>
std::vector<Vec> radical(const Ring& r, std::uint64_t cap) {
  const Field& k = r.field();
  const std::size_t d = r.dim();
  std::vector<Vec> found;
  if (k.finite()) {
    require_enumerable(r, cap, 2);
    const auto elems = all_elements(r, cap);
    std::vector<Vec> rad_span;  // echelon basis of what is known to lie in rad
    for (const auto& x : elems) {
      if (is_zero(x)) continue;
      if (!rad_span.empty() && Span(k, d, rad_span).contains(x)) continue;
      bool quasi_regular = true;
      for (const auto& a : elems) {
        Vec y = r.unit();
        const Vec ax = r.mul(a, x);
        for (std::size_t i = 0; i < d; ++i) y[i] -= ax[i];
        if (!r.left_mult(y).invertible()) {
          quasi_regular = false;
          break;
        }
      }
      if (quasi_regular) {
        found.push_back(x);
        rad_span = span_basis(k, d, found);
      }
    }
    return rad_span;
  }
  std::vector<Matrix> lm;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = zero_vec(k, d);
    e[i] = k.one();
    lm.push_back(r.left_mult(e));
  }
  Matrix trace_form(k, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix p = lm[i] * lm[j];
      Elem t = k.zero();
      for (std::size_t m = 0; m < d; ++m) t += p(m, m);
      trace_form(i, j) = t;
    }
  return span_basis(k, d, trace_form.nullspace());
}

/// Whether span(basis) is a two-sided ideal with ideal^m = 0 for some m <= dim.
template <class Ring>
bool is_nilpotent_ideal(const Ring& r, const std::vector<Vec>& basis) {
  const Field& k = r.field();
  const std::size_t d = r.dim();
  if (basis.empty()) return true;
  const Span ideal(k, d, basis);
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = zero_vec(k, d);
    e[i] = k.one();
    for (const auto& x : basis)
      if (!ideal.contains(r.mul(e, x)) || !ideal.contains(r.mul(x, e))) return false;
  }
  std::vector<Vec> power = basis;
  for (std::size_t m = 1; m <= d; ++m) {
    std::vector<Vec> next;
    for (const auto& x : power)
      for (const auto& y : basis) next.push_back(r.mul(x, y));
    power = span_basis(k, d, next);
    if (power.empty()) return true;
  }
  return false;
}

/// E / rad(E) with the induced involution, on the complement spanned by the
/// non-pivot coordinates of the radical's echelon basis.
inline AlgebraPtr quotient_radical(const InvAlgebra& a, std::uint64_t cap) {
  const Field& k = a.field();
  const std::size_t d = a.dim();
  const auto rad = radical(a, cap);
  const Span rad_span(k, d, rad);
  for (const auto& x : rad)
    if (!rad_span.contains(a.sigma(x))) throw Error(ErrorKind::RadicalNotStable);
  std::vector<std::size_t> pivots;
  for (const auto& row : rad)
    for (std::size_t j = 0; j < d; ++j)
      if (!row[j].is_zero()) {
        pivots.push_back(j);
        break;
      }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < d; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) keep.push_back(j);
  auto reduce = [&](Vec v) {
    for (std::size_t r = 0; r < rad.size(); ++r) {
      const Elem c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) v[j] -= c * rad[r][j];
    }
    Vec out;
    for (auto j : keep) out.push_back(v[j]);
    return out;
  };
  const std::size_t qd = keep.size();
  AlgebraData data{k, {}, std::vector<std::vector<Vec>>(qd, std::vector<Vec>(qd)), reduce(a.unit()),
                   Matrix(k, qd, qd), std::nullopt};
  for (std::size_t i = 0; i < qd; ++i) {
    data.basis.push_back(a.basis_names()[keep[i]]);
    data.involution.set_column(i, reduce(a.sigma(a.basis(keep[i]))));
    for (std::size_t j = 0; j < qd; ++j) data.structure[i][j] = reduce(a.product(keep[i], keep[j]));
  }
  if (qd == 0) throw Error(ErrorKind::BadDimension, "radical is the whole ring");
  return algebra_validate(std::move(data));
}

struct HermClass {
  Vec representative;
  std::size_t orbit_size = 0;
};

/// Congruence classes of E+ = {f unit : ~f = f} under f -> ~g f g.
inline std::vector<HermClass> herm_classes(const InvAlgebra& a, std::uint64_t cap) {
  const auto units = units_enumerate(a, cap);
  std::vector<Vec> plus;
  for (const auto& f : units)
    if (a.sigma(f) == f) plus.push_back(f);
  std::map<std::vector<std::uint32_t>, std::size_t> owner;
  std::vector<HermClass> classes;
  for (const auto& f : plus) {
    if (owner.contains(elem_key(f))) continue;
    const std::size_t id = classes.size();
    classes.push_back({f, 0});
    for (const auto& g : units) {
      const Vec h = a.mul(a.mul(a.sigma(g), f), g);
      if (owner.emplace(elem_key(h), id).second) ++classes[id].orbit_size;
    }
  }
  return classes;
}

/// First unit g (canonical order) with ~g f g = f'.
inline std::optional<Vec> congruence_decide(const InvAlgebra& a, const Vec& f, const Vec& f2,
                                            std::uint64_t cap) {
  for (const auto& g : units_enumerate(a, cap))
    if (a.mul(a.mul(a.sigma(g), f), g) == f2) return g;
  return std::nullopt;
}

struct TransferResult {
  Vec cls;          // eta0^{-1} eta_M in E+
  DAMorphism iso;   // q(s) -> Q0
};

/// eta0^{-1} eta_M for the form s, through the first isomorphism
/// q(s) -> Q0 in canonical order (or the one supplied).
inline TransferResult transfer_class(const SesqSystem& s, const EndoRing& e, std::uint64_t cap,
                                     std::optional<DAMorphism> iso = std::nullopt) {
  if (!e.algebra || !e.eta0) throw Error(ErrorKind::NotUnimodular, "endomorphism ring lacks involution");
  const HermitianObject q = q_of_form(s);
  if (!iso) {
    auto found = da_isomorphic(q.object, e.object, cap);
    if (found.status != SearchStatus::Found) throw Error(ErrorKind::NotIsomorphicToQ0);
    iso = found.iso;
  }
  const HermPair eta_m = herm_pushforward(q.object, q.form, e.object, *iso);
  const DAMorphism eta0_inv = da_inverse(*e.eta0);
  const DAMorphism f{eta0_inv.phi * eta_m.phi, eta0_inv.psi * eta_m.psi};
  Vec c = e.coords(f);
  const InvAlgebra& a = *e.algebra;
  if (!a.is_unit(c) || a.sigma(c) != c) throw Error(ErrorKind::NotHermitian, "transfer class not in E+");
  return {std::move(c), *iso};
}

/// Every isomorphism q(s) -> Q0 (micro-scale sweeps only).
inline std::vector<DAMorphism> all_isomorphisms(const DoubleArrow& m, const DoubleArrow& n, std::uint64_t cap) {
  std::vector<DAMorphism> out;
  if (m.V->dim() != n.V->dim() || m.W->dim() != n.W->dim()) return out;
  const auto basis = morphism_space(m, n);
  const Field& k = m.V->field();
  if (!sweep_size(k, basis.size(), cap)) throw Error(ErrorKind::EnumTooLarge);
  FiniteSweep sweep(k, basis.size());
  do {
    auto h = combine(basis, sweep.current(), m, n);
    if (da_invertible(h)) out.push_back(std::move(h));
  } while (sweep.next());
  return out;
}

}  // namespace sesq
