#pragma once

// Isometry deciders and seeded theorem checkers.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sesq/endoring.hpp"

namespace sesq {

enum class Verdict { Isometric, NotIsometric, Undecided };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Isometric: return "isometric";
    case Verdict::NotIsometric: return "not_isometric";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

/// Outcome of one isometry question. `witness` maps the first form onto the
/// second; `elapsed_ms` is informational and kept out of serialized reports.
struct DecisionReport {
  Verdict verdict = Verdict::Undecided;
  std::optional<Matrix> witness;
  std::string method;
  std::uint64_t search_size = 0;
  double elapsed_ms = 0;
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void require_comparable(const SesqSystem& s, const SesqSystem& t) {
  if (!same_algebra(*s.module, *t.module)) throw Error(ErrorKind::AlgebraMismatch);
  if (s.grams.size() != t.grams.size()) throw Error(ErrorKind::BadDimension, "system sizes differ");
}

inline DecisionReport found(DecisionReport r, const SesqSystem& s, const SesqSystem& t, Matrix phi) {
  if (!is_isometry_adjoint(s, t, phi)) throw Error(ErrorKind::NotAnIsometry, "witness failed re-verification");
  r.verdict = Verdict::Isometric;
  r.witness = std::move(phi);
  return r;
}

}  // namespace detail

/// Sweeps Hom_A(V, V') in canonical order for an invertible isometry.
inline DecisionReport isometry_bruteforce(const SesqSystem& s, const SesqSystem& t, std::uint64_t cap) {
  detail::Stopwatch clock;
  detail::require_comparable(s, t);
  const Field& k = s.module->field();
  if (!k.finite()) throw Error(ErrorKind::InfiniteField);
  DecisionReport r{Verdict::NotIsometric, std::nullopt, "bruteforce", 0, 0};
  const std::size_t n = s.module->dim();
  if (n != t.module->dim()) return r;
  if (n == 0) return detail::found(r, s, t, Matrix(k, 0, 0));
  const auto basis = hom_space(*s.module, *t.module);
  if (!sweep_size(k, basis.size(), cap))
    throw Error(ErrorKind::EnumTooLarge, "hom space of dimension " + std::to_string(basis.size()));
  FiniteSweep sweep(k, basis.size());
  const InvAlgebra& a = s.module->alg();
  do {
    ++r.search_size;
    const Vec& c = sweep.current();
    Matrix phi(k, n, n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!c[i].is_zero()) phi += c[i] * basis[i];
    if (!phi.invertible()) continue;
    bool ok = true;
    for (std::size_t m = 0; m < s.grams.size() && ok; ++m) ok = pullback(a, t.grams[m], phi) == s.grams[m];
    if (ok) {
      r.elapsed_ms = clock.ms();
      return detail::found(std::move(r), s, t, std::move(phi));
    }
  } while (sweep.next());
  r.elapsed_ms = clock.ms();
  return r;
}

namespace detail {

/// Depth-first construction of an isometry one module generator at a time.
/// Each new generator image v is cut out by linear equations (A-linear
/// relations against the part already mapped, and the cross values of every
/// form); only the diagonal value s'(v, v) is checked per candidate.
class Backtracker {
 public:
  Backtracker(const SesqSystem& s, const SesqSystem& t, std::uint64_t cap)
      : s_(s), t_(t), a_(s.module->alg()), k_(a_.field()), n_(s.module->dim()), cap_(cap) {}

  /// Found / None / Undecided (cap hit or an infinite candidate family).
  SearchStatus run() {
    std::vector<Vec> dom, img;
    const bool hit = extend(dom, img);
    if (hit) return SearchStatus::Found;
    return incomplete_ ? SearchStatus::Undecided : SearchStatus::None;
  }
  const std::optional<Matrix>& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Vec unit_vec(std::size_t j) const {
    Vec e = zero_vec(k_, n_);
    e[j] = k_.one();
    return e;
  }

  bool finish(const std::vector<Vec>& dom, const std::vector<Vec>& img) {
    const Matrix d = Matrix::from_columns(k_, n_, dom);
    const Matrix phi = Matrix::from_columns(k_, n_, img) * d.inverse();
    if (!is_isometry(s_, t_, phi)) return false;
    witness_ = phi;
    return true;
  }

  bool extend(const std::vector<Vec>& dom, const std::vector<Vec>& img) {
    if (dom.size() == n_) return finish(dom, img);
    const Span dom_span(k_, n_, dom);
    std::size_t j = 0;
    while (dom_span.contains(unit_vec(j))) ++j;
    const Vec ej = unit_vec(j);
    const std::size_t d = a_.dim(), r = dom.size();

    std::vector<Vec> words;  // e_j a_i
    for (std::size_t i = 0; i < d; ++i) words.push_back(s_.module->action(i) * ej);

    std::vector<Vec> rows;
    Vec rhs;
    // Relations sum lambda_i e_j a_i + sum mu_m u_m = 0 must persist.
    std::vector<Vec> cols = words;
    cols.insert(cols.end(), dom.begin(), dom.end());
    for (const auto& rel : Matrix::from_columns(k_, n_, cols).nullspace()) {
      Matrix lhs(k_, n_, n_);
      Vec target = zero_vec(k_, n_);
      for (std::size_t i = 0; i < d; ++i)
        if (!rel[i].is_zero()) lhs += rel[i] * t_.module->action(i);
      for (std::size_t m = 0; m < r; ++m)
        if (!rel[d + m].is_zero())
          for (std::size_t x = 0; x < n_; ++x) target[x] -= rel[d + m] * img[m][x];
      for (std::size_t x = 0; x < n_; ++x) {
        Vec row(n_, k_.zero());
        for (std::size_t c = 0; c < n_; ++c) row[c] = lhs(x, c);
        rows.push_back(std::move(row));
        rhs.push_back(target[x]);
      }
    }
    // s'(phi u, v) = s(u, e_j) and s'(v, phi u) = s(e_j, u).
    for (std::size_t g = 0; g < s_.grams.size(); ++g) {
      const Gram& gs = s_.grams[g];
      const Gram& gt = t_.grams[g];
      for (std::size_t m = 0; m < r; ++m) {
        const Vec left = evaluate(a_, gs, dom[m], ej), right = evaluate(a_, gs, ej, dom[m]);
        for (std::size_t q = 0; q < d; ++q) {
          Vec row1(n_, k_.zero()), row2(n_, k_.zero());
          for (std::size_t x = 0; x < n_; ++x) {
            if (img[m][x].is_zero()) continue;
            for (std::size_t c = 0; c < n_; ++c) {
              row1[c] += img[m][x] * gt(x, c)[q];
              row2[c] += img[m][x] * gt(c, x)[q];
            }
          }
          rows.push_back(std::move(row1));
          rhs.push_back(left[q]);
          rows.push_back(std::move(row2));
          rhs.push_back(right[q]);
        }
      }
    }

    Vec particular = zero_vec(k_, n_);
    std::vector<Vec> free;
    if (rows.empty()) {
      for (std::size_t c = 0; c < n_; ++c) free.push_back(unit_vec(c));
    } else {
      Matrix sys(k_, rows.size(), n_);
      for (std::size_t x = 0; x < rows.size(); ++x)
        for (std::size_t c = 0; c < n_; ++c) sys(x, c) = rows[x][c];
      auto sol = sys.solve(rhs);
      if (!sol) return false;
      particular = *sol;
      free = sys.nullspace();
    }
    if (!free.empty() && !k_.finite()) {
      incomplete_ = true;
      return false;
    }

    std::vector<Vec> diag;
    for (const auto& g : s_.grams) diag.push_back(evaluate(a_, g, ej, ej));
    // New domain vectors: the words not already spanned.
    std::vector<std::size_t> fresh;
    {
      std::vector<Vec> acc = dom;
      for (std::size_t i = 0; i < d; ++i) {
        acc.push_back(words[i]);
        if (span_basis(k_, n_, acc).size() == acc.size()) fresh.push_back(i);
        else acc.pop_back();
      }
    }

    FiniteSweep sweep = k_.finite() ? FiniteSweep(k_, free.size()) : FiniteSweep(Field::prime(2), 0);
    do {
      if (++nodes_ > cap_) {
        incomplete_ = true;
        return false;
      }
      Vec v = particular;
      const Vec& c = sweep.current();
      for (std::size_t f = 0; f < free.size(); ++f)
        if (!c[f].is_zero())
          for (std::size_t x = 0; x < n_; ++x) v[x] += c[f] * free[f][x];
      bool ok = true;
      for (std::size_t g = 0; g < t_.grams.size() && ok; ++g) ok = evaluate(a_, t_.grams[g], v, v) == diag[g];
      if (!ok) continue;
      std::vector<Vec> dom2 = dom, img2 = img;
      for (auto i : fresh) {
        dom2.push_back(words[i]);
        img2.push_back(t_.module->action(i) * v);
      }
      if (span_basis(k_, n_, img2).size() != img2.size()) continue;
      if (extend(dom2, img2)) return true;
      if (nodes_ > cap_) return false;
    } while (sweep.next());
    return false;
  }

  const SesqSystem& s_;
  const SesqSystem& t_;
  const InvAlgebra& a_;
  Field k_;
  std::size_t n_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool incomplete_ = false;
  std::optional<Matrix> witness_;
};

}  // namespace detail

/// Pruned search; exhaustive unless the node cap is reached (then undecided).
/// Over Q it decides only when every generator image is forced.
inline DecisionReport isometry_backtrack(const SesqSystem& s, const SesqSystem& t, std::uint64_t cap) {
  detail::Stopwatch clock;
  detail::require_comparable(s, t);
  DecisionReport r{Verdict::NotIsometric, std::nullopt, "backtrack", 0, 0};
  if (s.module->dim() != t.module->dim()) return r;
  detail::Backtracker bt(s, t, cap);
  const SearchStatus st = bt.run();
  r.search_size = bt.nodes();
  r.elapsed_ms = clock.ms();
  if (st == SearchStatus::Found) return detail::found(std::move(r), s, t, *bt.witness());
  if (st == SearchStatus::Undecided) r.verdict = Verdict::Undecided;
  return r;
}

/// Classifies through the endomorphism ring of Q0 = q(s): the forms are
/// isometric iff their transfer classes are congruent in E+.
inline DecisionReport isometry_transfer(const SesqSystem& s, const SesqSystem& t, std::uint64_t cap) {
  detail::Stopwatch clock;
  detail::require_comparable(s, t);
  const Field& k = s.module->field();
  if (!k.finite()) throw Error(ErrorKind::InfiniteField);
  DecisionReport r{Verdict::NotIsometric, std::nullopt, "transfer", 0, 0};
  const HermitianObject q0 = q_of_form(s);
  const HermitianObject qt = q_of_form(t);
  const IsoSearch iso = da_isomorphic(qt.object, q0.object, cap);
  r.search_size += iso.searched;
  if (iso.status != SearchStatus::Found) {
    r.elapsed_ms = clock.ms();
    return r;
  }
  if (s.module->dim() == 0) return detail::found(std::move(r), s, t, Matrix(k, 0, 0));
  const EndoRing e = induced_involution(endo_compute(q0.object), q0.form);
  const InvAlgebra& ea = *e.algebra;
  const Vec f = transfer_class(s, e, cap, da_identity(q0.object)).cls;
  const Vec f2 = transfer_class(t, e, cap, *iso.iso).cls;
  r.search_size += *sweep_size(k, ea.dim(), cap);
  const auto g = congruence_decide(ea, f, f2, cap);
  r.elapsed_ms = clock.ms();
  if (!g) return r;
  // g* eta_s g = eta_t pushed to Q0, so (g o iso) : q(t) -> q(s) is a
  // hermitian isometry; its first component is an isometry t -> s.
  const DAMorphism lambda = da_compose(e.element(*g), *iso.iso);
  return detail::found(std::move(r), s, t, lambda.phi.inverse());
}

inline DecisionReport isometry_bruteforce(const SesqForm& s, const SesqForm& t, std::uint64_t cap) {
  return isometry_bruteforce(as_system(s), as_system(t), cap);
}
inline DecisionReport isometry_backtrack(const SesqForm& s, const SesqForm& t, std::uint64_t cap) {
  return isometry_backtrack(as_system(s), as_system(t), cap);
}
inline DecisionReport isometry_transfer(const SesqForm& s, const SesqForm& t, std::uint64_t cap) {
  return isometry_transfer(as_system(s), as_system(t), cap);
}

/// Equivariant isometry of G-bilinear forms: invertible f in Hom_{k[G]}
/// with f^T B' f = B.
inline DecisionReport gbilinear_isometry_bruteforce(const GBilinearForm& b, const GBilinearForm& b2,
                                                    std::uint64_t cap) {
  if (!same_algebra(*b.module, *b2.module)) throw Error(ErrorKind::AlgebraMismatch);
  const Field& k = b.module->field();
  if (!k.finite()) throw Error(ErrorKind::InfiniteField);
  DecisionReport r{Verdict::NotIsometric, std::nullopt, "bruteforce", 0, 0};
  const std::size_t n = b.module->dim();
  if (n != b2.module->dim()) return r;
  if (n == 0) {
    r.verdict = Verdict::Isometric;
    r.witness = Matrix(k, 0, 0);
    return r;
  }
  const auto basis = hom_space(*b.module, *b2.module);
  if (!sweep_size(k, basis.size(), cap)) throw Error(ErrorKind::EnumTooLarge);
  FiniteSweep sweep(k, basis.size());
  do {
    ++r.search_size;
    Matrix f(k, n, n);
    for (std::size_t i = 0; i < basis.size(); ++i) f += sweep.current()[i] * basis[i];
    if (f.invertible() && f.transpose() * b2.gram * f == b.gram) {
      r.verdict = Verdict::Isometric;
      r.witness = std::move(f);
      return r;
    }
  } while (sweep.next());
  return r;
}

// Theorem suites ----------------------------------------------------------------

struct Counterexample {
  std::string reason;
  std::vector<SesqForm> forms;
};

/// Seeded suite outcome. `counts` and `info` are ordered maps so that the
/// serialized report is a pure function of the inputs.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint64_t undecided = 0;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::string> info;
  std::vector<Counterexample> counterexamples;
};

/// Module for a cyclic group ring where the generator acts by `gen`.
inline ModulePtr cyclic_module(const AlgebraPtr& alg, const Matrix& gen) {
  const Group& g = require_group(*alg);
  std::vector<Matrix> action(g.order());
  Matrix power = Matrix::identity(alg->field(), gen.rows());
  std::size_t idx = g.unit;
  for (std::size_t i = 0; i < g.order(); ++i) {
    action[idx] = power;
    power = gen * power;
    idx = g.table[idx][1 % g.order()];
  }
  return module_validate(alg, gen.rows(), std::move(action));
}

/// Small fixture modules over k, k[C_2] (trivial, sign, regular, sums) and
/// k[C_3] (trivial, the 2-dim companion module of x^2 + x + 1), capped at
/// k-dimension `max_dim`.
inline std::vector<ModulePtr> fixture_modules(const AlgebraPtr& alg, std::size_t max_dim) {
  const Field& k = alg->field();
  std::vector<ModulePtr> out;
  auto add = [&](ModulePtr m) {
    if (m->dim() >= 1 && m->dim() <= max_dim) out.push_back(std::move(m));
  };
  if (!alg->group()) {
    for (std::size_t n = 1; n <= max_dim; ++n) add(free_base_module(alg, n));
    return out;
  }
  const std::size_t order = alg->group()->order();
  auto gen = [&](std::initializer_list<std::int64_t> entries, std::size_t n) {
    Vec flat;
    for (auto x : entries) flat.push_back(k.from_int(x));
    return Matrix::from_flat(k, n, n, flat);
  };
  const ModulePtr triv = trivial_module(alg);
  add(triv);
  if (order == 2) {
    const ModulePtr sign = cyclic_module(alg, gen({-1}, 1));
    add(sign);
    add(regular_module(alg));
    add(direct_sum(triv, triv));
    add(direct_sum(triv, sign));
    add(direct_sum(sign, sign));
  } else if (order == 3) {
    add(cyclic_module(alg, gen({0, -1, 1, -1}, 2)));
    add(direct_sum(triv, triv));
  }
  return out;
}

/// Algebras used by the cancellation suite: k, k[C_2], k[C_3].
inline std::vector<AlgebraPtr> witt_algebras(const Field& k) {
  return {base_algebra(k), group_ring(k, cyclic_group(2)), group_ring(k, cyclic_group(3))};
}

inline Matrix random_invertible(const Field& k, std::size_t n, Rng& rng) {
  for (;;) {
    const Matrix p = Matrix::from_flat(k, n, n, rng.vec(k, n * n));
    if (n == 0 || p.invertible()) return p;
  }
}

/// Checks s1 + s = s2 + s  =>  s1 = s2 on seeded trials (backtracking decider
/// with node cap `cap`). Violations: certified sums with non-isometric
/// summands, or isometric summands with sums certified non-isometric.
inline SuiteReport witt_cancellation_check(const Field& k, std::size_t max_dim, std::uint64_t trials,
                                           std::uint64_t seed, std::uint64_t cap) {
  if (k.characteristic() == 2) throw Error(ErrorKind::CharacteristicTwo);
  if (!k.finite()) throw Error(ErrorKind::InfiniteField);
  SuiteReport rep;
  rep.suite = "witt";
  rep.seed = seed;
  rep.info["field"] = k.name();
  rep.info["max_dim"] = std::to_string(max_dim);
  for (const char* c : {"planted", "sums_isometric", "bases_isometric", "search_nodes"}) rep.counts[c] = 0;
  const auto algebras = witt_algebras(k);
  std::vector<std::vector<ModulePtr>> libs;
  for (const auto& a : algebras) libs.push_back(fixture_modules(a, max_dim));

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const std::size_t ai = rng.below(algebras.size());
    const auto& lib = libs[ai];
    const ModulePtr m = lib[rng.below(lib.size())];
    const ModulePtr m1 = lib[rng.below(lib.size())];
    const SesqForm s = random_form(m, rng.next());
    const SesqForm s1 = random_form(m1, rng.next());
    const bool planted = rng.coin();
    SesqForm s2;
    if (planted) {
      s2 = transport(s1, random_invertible(k, m1->dim(), rng));
    } else {
      std::vector<ModulePtr> same_dim;
      for (const auto& x : lib)
        if (x->dim() == m1->dim()) same_dim.push_back(x);
      const ModulePtr m2 = same_dim[rng.below(same_dim.size())];
      s2 = transport(random_form(m2, rng.next()), random_invertible(k, m2->dim(), rng));
    }
    ++rep.trials;
    if (planted) ++rep.counts["planted"];

    const DecisionReport sums = isometry_backtrack(orth_sum(s1, s), orth_sum(s2, s), cap);
    const DecisionReport bases = isometry_backtrack(s1, s2, cap);
    rep.counts["search_nodes"] += sums.search_size + bases.search_size;
    if (sums.verdict == Verdict::Isometric) ++rep.counts["sums_isometric"];
    if (bases.verdict == Verdict::Isometric) ++rep.counts["bases_isometric"];
    if (sums.verdict == Verdict::Undecided || bases.verdict == Verdict::Undecided) {
      ++rep.undecided;
      continue;
    }
    std::string reason;
    if (sums.verdict == Verdict::Isometric && bases.verdict == Verdict::NotIsometric)
      reason = "sums isometric, summands not";
    else if (sums.verdict == Verdict::NotIsometric && bases.verdict == Verdict::Isometric)
      reason = "summands isometric, sums not";
    else if (planted && bases.verdict != Verdict::Isometric)
      reason = "planted pair not certified";
    if (!reason.empty()) {
      ++rep.violations;
      rep.counterexamples.push_back({"trial " + std::to_string(trial) + ": " + reason, {s, s1, s2}});
    }
  }
  return rep;
}

/// Decides s vs s' over F_p and over F_{p^d}. For odd d, isometry over the
/// extension without isometry over the base is a violation.
inline SuiteReport springer_check(const SesqForm& s, const SesqForm& t, std::size_t d, std::uint64_t cap) {
  const Field& k = s.module->field();
  if (!k.finite()) throw Error(ErrorKind::InfiniteField);
  if (k.degree() != 1) throw Error(ErrorKind::NoEmbedding, "base field must be prime");
  if (d == 0) throw Error(ErrorKind::BadDimension, "degree must be positive");
  const Field ext = Field::extension_of_degree(k.characteristic(), d);
  const DecisionReport base = isometry_bruteforce(s, t, cap);
  const DecisionReport up = isometry_bruteforce(form_extend(s, ext), form_extend(t, ext), cap);
  SuiteReport rep;
  rep.suite = "springer";
  rep.trials = 1;
  rep.info["base_field"] = k.name();
  rep.info["extension_field"] = ext.name();
  rep.info["degree"] = std::to_string(d);
  rep.info["base_verdict"] = std::string(to_string(base.verdict));
  rep.info["extension_verdict"] = std::string(to_string(up.verdict));
  rep.info["asserted"] = d % 2 ? "true" : "false";
  rep.counts["search_size"] = base.search_size + up.search_size;
  if (d % 2 == 1 && up.verdict == Verdict::Isometric && base.verdict != Verdict::Isometric) {
    ++rep.violations;
    rep.counterexamples.push_back({"isometric over extension only", {s, t}});
  }
  return rep;
}

struct SummandClass {
  SesqForm form;
  std::uint64_t idempotents = 0;  // admissible idempotents with this image class
};

/// Isometry classes of orthogonal summands: images of idempotents e in
/// End_A(V) with s(eV, (1-e)V) = 0 = s((1-e)V, eV), deduplicated by
/// bruteforce isometry; sorted by dimension, then discovery order.
inline std::vector<SummandClass> summand_enumerate(const SesqForm& s, std::uint64_t cap) {
  const Field& k = s.module->field();
  if (!k.finite()) throw Error(ErrorKind::InfiniteField);
  const std::size_t n = s.module->dim();
  const InvAlgebra& a = s.module->alg();
  const auto basis = hom_space(*s.module, *s.module);
  if (!sweep_size(k, basis.size(), cap)) throw Error(ErrorKind::EnumTooLarge);
  const Matrix id = Matrix::identity(k, n);
  std::vector<SummandClass> classes;
  if (n == 0) return {{s, 1}};
  FiniteSweep sweep(k, basis.size());
  do {
    Matrix e(k, n, n);
    for (std::size_t i = 0; i < basis.size(); ++i) e += sweep.current()[i] * basis[i];
    if (e * e != e) continue;
    const Matrix f = id - e;
    const Gram zero = zero_gram(a, n);
    if (cross_gram(a, s.gram, e, f) != zero || cross_gram(a, s.gram, f, e) != zero) continue;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(e.column(j));
    const SesqForm part = restrict_form(s, span_basis(k, n, cols));
    bool known = false;
    for (auto& c : classes)
      if (c.form.module->dim() == part.module->dim() &&
          isometry_bruteforce(c.form, part, cap).verdict == Verdict::Isometric) {
        ++c.idempotents;
        known = true;
        break;
      }
    if (!known) classes.push_back({part, 1});
  } while (sweep.next());
  std::stable_sort(classes.begin(), classes.end(), [](const SummandClass& x, const SummandClass& y) {
    return x.form.module->dim() < y.form.module->dim();
  });
  return classes;
}

}  // namespace sesq
