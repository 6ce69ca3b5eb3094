#pragma once

#include <string>
#include <vector>

#include "sesq/sesq.hpp"

namespace testutil {

using namespace sesq;

inline constexpr std::uint64_t kCap = 1000000;

inline Matrix mat(const Field& k, std::size_t r, std::size_t c, std::initializer_list<std::int64_t> xs) {
  Vec flat;
  for (auto x : xs) flat.push_back(k.from_int(x));
  return Matrix::from_flat(k, r, c, flat);
}

inline Vec vec(const Field& k, std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(k.from_int(x));
  return v;
}

/// Form over A = k with an integer Gram matrix.
inline SesqForm kform(const Field& k, std::size_t n, std::initializer_list<std::int64_t> xs) {
  const AlgebraPtr a = base_algebra(k);
  return form_validate(free_base_module(a, n), scalar_gram(*a, mat(k, n, n, xs)));
}

/// Small algebras used across the property tests.
struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

inline std::vector<NamedAlgebra> fixture_algebras() {
  return {{"F_3", base_algebra(Field::prime(3))},
          {"F_5", base_algebra(Field::prime(5))},
          {"F_3[C_2]", group_ring(Field::prime(3), cyclic_group(2))},
          {"F_2[C_3]", group_ring(Field::prime(2), cyclic_group(3))},
          {"M_2(F_3)", matrix_algebra(Field::prime(3), 2)}};
}

/// Modules of k-dimension at most 4 over a fixture algebra.
inline std::vector<ModulePtr> fixture_modules_upto4(const AlgebraPtr& a) {
  std::vector<ModulePtr> out;
  if (a->dim() == 1) {
    for (std::size_t n = 1; n <= 3; ++n) out.push_back(free_base_module(a, n));
  } else if (a->group()) {
    out = fixture_modules(a, 2);
    out.push_back(regular_module(a));
    if (a->dim() == 2) out.push_back(direct_sum(regular_module(a), regular_module(a)));
  } else {
    out.push_back(row_module(a, 2));
    out.push_back(direct_sum(row_module(a, 2), row_module(a, 2)));
    out.push_back(regular_module(a));
  }
  return out;
}

/// The full list of k-dimension <= 2 unimodular forms over F_3 with A = F_3.
inline std::vector<SesqForm> f3_unimodular_family() {
  const Field k = Field::prime(3);
  const AlgebraPtr a = base_algebra(k);
  std::vector<SesqForm> out;
  for (std::size_t n = 1; n <= 2; ++n) {
    FiniteSweep sweep(k, n * n);
    do {
      const Matrix g = Matrix::from_flat(k, n, n, sweep.current());
      if (!g.invertible()) continue;
      out.push_back(form_validate(free_base_module(a, n), scalar_gram(*a, g)));
    } while (sweep.next());
  }
  return out;
}

}  // namespace testutil
