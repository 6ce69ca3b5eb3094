#pragma once

// Objects (V, W, [(f_i, g_i)]) with parallel A-linear arrows V -> W, their
// duality (W*, V*, [(g_i*, f_i*)]) and hermitian forms on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "sesq/form.hpp"

namespace sesq {

struct ArrowPair {
  Matrix f, g;
};

struct DoubleArrow {
  ModulePtr V, W;
  std::vector<ArrowPair> arrows;
};

/// (phi : V -> V', psi : W -> W').
struct DAMorphism {
  Matrix phi, psi;
  friend bool operator==(const DAMorphism&, const DAMorphism&) = default;
};

/// A morphism M -> M*: phi : V -> W*, psi : W -> V*.
using HermPair = DAMorphism;

/// Matrix of T* : W* -> V* for T : V -> W.
inline Matrix dual_matrix(const ModulePtr& v, const ModulePtr& w, const Matrix& t) {
  return dual_hom(ModuleHom{v, w, t}).matrix;
}

inline DoubleArrow da_validate(ModulePtr v, ModulePtr w, std::vector<ArrowPair> arrows) {
  if (!same_algebra(*v, *w)) throw Error(ErrorKind::AlgebraMismatch);
  if (arrows.empty()) throw Error(ErrorKind::BadDimension, "at least one arrow pair");
  for (const auto& a : arrows)
    if (!intertwines(*v, *w, a.f) || !intertwines(*v, *w, a.g))
      throw Error(ErrorKind::NotAMorphism, "arrow is not A-linear");
  return {std::move(v), std::move(w), std::move(arrows)};
}

inline DoubleArrow da_dual(const DoubleArrow& m) {
  DoubleArrow d{m.W->dual().module, m.V->dual().module, {}};
  for (const auto& a : m.arrows)
    d.arrows.push_back({dual_matrix(m.V, m.W, a.g), dual_matrix(m.V, m.W, a.f)});
  return d;
}

inline bool da_morphism_check(const DoubleArrow& m, const DoubleArrow& n, const DAMorphism& h) {
  if (m.arrows.size() != n.arrows.size()) return false;
  if (!intertwines(*m.V, *n.V, h.phi) || !intertwines(*m.W, *n.W, h.psi)) return false;
  for (std::size_t i = 0; i < m.arrows.size(); ++i) {
    if (n.arrows[i].f * h.phi != h.psi * m.arrows[i].f) return false;
    if (n.arrows[i].g * h.phi != h.psi * m.arrows[i].g) return false;
  }
  return true;
}

inline DAMorphism da_identity(const DoubleArrow& m) {
  return {Matrix::identity(m.V->field(), m.V->dim()), Matrix::identity(m.W->field(), m.W->dim())};
}

inline DAMorphism da_compose(const DAMorphism& outer, const DAMorphism& inner) {
  return {outer.phi * inner.phi, outer.psi * inner.psi};
}

inline bool da_invertible(const DAMorphism& h) {
  auto inv = [](const Matrix& x) { return x.square() && (x.rows() == 0 || x.invertible()); };
  return inv(h.phi) && inv(h.psi);
}

inline DAMorphism da_inverse(const DAMorphism& h) {
  if (!da_invertible(h)) throw Error(ErrorKind::NotInvertible);
  return {h.phi.inverse(), h.psi.inverse()};
}

/// Dual of h : M -> N is (psi*, phi*) : N* -> M*.
inline DAMorphism da_dual_morphism(const DoubleArrow& m, const DoubleArrow& n, const DAMorphism& h) {
  return {dual_matrix(m.W, n.W, h.psi), dual_matrix(m.V, n.V, h.phi)};
}

/// E_M = (e_V, e_W) : M -> M**.
inline DAMorphism da_evaluation(const DoubleArrow& m) {
  return {double_dual_map(m.V).matrix, double_dual_map(m.W).matrix};
}

/// h = h* E_M, i.e. phi = psi* e_V and psi = phi* e_W. Throws NotAMorphism
/// if h is not a morphism M -> M*.
inline bool herm_check(const DoubleArrow& m, const HermPair& h) {
  const DoubleArrow md = da_dual(m);
  if (!da_morphism_check(m, md, h)) throw Error(ErrorKind::NotAMorphism);
  const Matrix psi_star = dual_matrix(m.W, md.W, h.psi);  // V** -> W*
  const Matrix phi_star = dual_matrix(m.V, md.V, h.phi);  // W** -> V*
  return h.phi == psi_star * double_dual_map(m.V).matrix &&
         h.psi == phi_star * double_dual_map(m.W).matrix;
}

struct HermitianObject {
  DoubleArrow object;
  HermPair form;
};

/// F(V, s) = ((V, V*, [(s_l, s_r)]), (e_V, id_{V*})).
inline HermitianObject q_of_form(const SesqSystem& s) {
  if (!reflexive_check(s.module)) throw Error(ErrorKind::NotReflexive);
  const ModulePtr& v = s.module;
  DoubleArrow m{v, v->dual().module, {}};
  for (const auto& g : s.grams)
    m.arrows.push_back({left_adjoint(v, g).matrix, right_adjoint(v, g).matrix});
  HermPair eta{double_dual_map(v).matrix, Matrix::identity(v->field(), m.W->dim())};
  return {std::move(m), std::move(eta)};
}
inline HermitianObject q_of_form(const SesqForm& s) { return q_of_form(as_system(s)); }

enum class GConvention {
  LeftAdjoint,  // s_l := psi f_i; inverts q_of_form exactly
  Literal,      // s_l := psi g_i; yields the sigma-transpose of the input
};

/// G(M, h): the system on V with s_l := psi f_i (or psi g_i).
inline SesqSystem form_of_herm(const DoubleArrow& m, const HermPair& h,
                               GConvention mode = GConvention::LeftAdjoint) {
  bool ok = false;
  try {
    ok = herm_check(m, h);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAMorphism) throw;
  }
  if (!ok) throw Error(ErrorKind::NotHermitian);
  SesqSystem s{m.V, {}};
  for (const auto& a : m.arrows) {
    const Matrix l = h.psi * (mode == GConvention::LeftAdjoint ? a.f : a.g);
    s.grams.push_back(gram_from_left_adjoint(m.V, l));
  }
  return system_validate(s.module, std::move(s.grams));
}

/// F(phi) = (phi, phi*^{-1}) for an isometry phi : (V, s) -> (V', s').
inline DAMorphism f_on_morphism(const SesqSystem& s, const SesqSystem& t, const Matrix& phi) {
  if (!is_isometry_adjoint(s, t, phi)) throw Error(ErrorKind::NotAnIsometry);
  const Matrix phi_star = dual_matrix(s.module, t.module, phi);  // V'* -> V*
  DAMorphism out{phi, phi_star.rows() ? phi_star.inverse() : phi_star};
  // phi** e_V = e_V' phi
  const ModulePtr& vd = s.module->dual().module;
  const ModulePtr& td = t.module->dual().module;
  const Matrix phi_ss = dual_matrix(td, vd, phi_star);
  if (phi_ss * double_dual_map(s.module).matrix != double_dual_map(t.module).matrix * phi)
    throw Error(ErrorKind::NotAMorphism, "phi** e_V != e_V' phi");
  return out;
}

/// Basis of all morphisms M -> N (solution space of the linear conditions).
inline std::vector<DAMorphism> morphism_space(const DoubleArrow& m, const DoubleArrow& n) {
  if (!same_algebra(*m.V, *n.V)) throw Error(ErrorKind::AlgebraMismatch);
  if (m.arrows.size() != n.arrows.size()) return {};
  const Field& k = m.V->field();
  const std::size_t nv = m.V->dim(), nw = m.W->dim(), nv2 = n.V->dim(), nw2 = n.W->dim();
  const std::size_t phi_size = nv2 * nv, psi_size = nw2 * nw, unknowns = phi_size + psi_size;
  if (unknowns == 0) return {};
  auto phi_at = [&](std::size_t r, std::size_t c) { return r * nv + c; };
  auto psi_at = [&](std::size_t r, std::size_t c) { return phi_size + r * nw + c; };
  std::vector<Vec> rows;
  auto new_row = [&] { return zero_vec(k, unknowns); };
  const InvAlgebra& a = m.V->alg();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t r = 0; r < nv2; ++r)
      for (std::size_t c = 0; c < nv; ++c) {
        Vec row = new_row();
        for (std::size_t l = 0; l < nv; ++l) row[phi_at(r, l)] += m.V->action(i)(l, c);
        for (std::size_t l = 0; l < nv2; ++l) row[phi_at(l, c)] -= n.V->action(i)(r, l);
        rows.push_back(std::move(row));
      }
    for (std::size_t r = 0; r < nw2; ++r)
      for (std::size_t c = 0; c < nw; ++c) {
        Vec row = new_row();
        for (std::size_t l = 0; l < nw; ++l) row[psi_at(r, l)] += m.W->action(i)(l, c);
        for (std::size_t l = 0; l < nw2; ++l) row[psi_at(l, c)] -= n.W->action(i)(r, l);
        rows.push_back(std::move(row));
      }
  }
  // x'_i phi - psi x_i = 0 for x in {f, g}
  for (std::size_t idx = 0; idx < m.arrows.size(); ++idx)
    for (int which = 0; which < 2; ++which) {
      const Matrix& x = which ? m.arrows[idx].g : m.arrows[idx].f;
      const Matrix& y = which ? n.arrows[idx].g : n.arrows[idx].f;
      for (std::size_t r = 0; r < nw2; ++r)
        for (std::size_t c = 0; c < nv; ++c) {
          Vec row = new_row();
          for (std::size_t l = 0; l < nv2; ++l) row[phi_at(l, c)] += y(r, l);
          for (std::size_t l = 0; l < nw; ++l) row[psi_at(r, l)] -= x(l, c);
          rows.push_back(std::move(row));
        }
    }
  Matrix sys(k, rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];
  std::vector<DAMorphism> out;
  for (const auto& x : sys.nullspace()) {
    Vec phi(x.begin(), x.begin() + phi_size), psi(x.begin() + phi_size, x.end());
    out.push_back({Matrix::from_flat(k, nv2, nv, phi), Matrix::from_flat(k, nw2, nw, psi)});
  }
  return out;
}

inline DAMorphism combine(const std::vector<DAMorphism>& basis, const Vec& c, const DoubleArrow& m,
                          const DoubleArrow& n) {
  const Field& k = m.V->field();
  DAMorphism h{Matrix(k, n.V->dim(), m.V->dim()), Matrix(k, n.W->dim(), m.W->dim())};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i].is_zero()) continue;
    h.phi += c[i] * basis[i].phi;
    h.psi += c[i] * basis[i].psi;
  }
  return h;
}

enum class SearchStatus { Found, None, Undecided };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Undecided: return "undecided";
  }
  return "?";
}

struct IsoSearch {
  SearchStatus status = SearchStatus::None;
  std::optional<DAMorphism> iso;
  std::uint64_t searched = 0;
};

/// Finds an isomorphism M -> N. Over a finite field the whole morphism space
/// is swept in canonical order (EnumTooLarge above `cap`); over Q up to
/// `trials` seeded random combinations are tried.
inline IsoSearch da_isomorphic(const DoubleArrow& m, const DoubleArrow& n, std::uint64_t cap,
                               std::uint64_t trials = 1000, std::uint64_t seed = 0) {
  if (!same_algebra(*m.V, *n.V)) throw Error(ErrorKind::AlgebraMismatch);
  IsoSearch out;
  if (m.V->dim() != n.V->dim() || m.W->dim() != n.W->dim() || m.arrows.size() != n.arrows.size())
    return out;
  const auto basis = morphism_space(m, n);
  const Field& k = m.V->field();
  auto accept = [&](const DAMorphism& h) {
    if (!da_invertible(h)) return false;
    out.status = SearchStatus::Found;
    out.iso = h;
    return true;
  };
  if (m.V->dim() + m.W->dim() == 0) {
    accept(da_identity(m));
    return out;
  }
  if (k.finite()) {
    if (!sweep_size(k, basis.size(), cap))
      throw Error(ErrorKind::EnumTooLarge, "morphism space of dimension " + std::to_string(basis.size()));
    FiniteSweep sweep(k, basis.size());
    do {
      ++out.searched;
      if (accept(combine(basis, sweep.current(), m, n))) return out;
    } while (sweep.next());
    return out;
  }
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++out.searched;
    if (accept(combine(basis, rng.vec(k, basis.size()), m, n))) return out;
  }
  out.status = SearchStatus::Undecided;
  return out;
}

/// eta = (phi*)^{-1} h phi^{-1} for an isomorphism phi : M -> M0.
inline HermPair herm_pushforward(const DoubleArrow& m, const HermPair& h, const DoubleArrow& m0,
                                 const DAMorphism& phi) {
  const DAMorphism inv = da_inverse(phi);
  const Matrix a_star = dual_matrix(m.V, m0.V, phi.phi);  // V0* -> V*
  const Matrix b_star = dual_matrix(m.W, m0.W, phi.psi);  // W0* -> W*
  auto inverse_or_empty = [](const Matrix& x) { return x.rows() ? x.inverse() : x; };
  return {inverse_or_empty(b_star) * h.phi * inv.phi, inverse_or_empty(a_star) * h.psi * inv.psi};
}

}  // namespace sesq
