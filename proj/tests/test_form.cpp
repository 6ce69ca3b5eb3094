#include <gtest/gtest.h>

#include "common.hpp"

using namespace sesq;
using testutil::kform;

TEST(Form, RejectsNonSesquilinearGram) {
  const AlgebraPtr a = group_ring(Field::prime(3), cyclic_group(2));
  const ModulePtr v = trivial_module(a);
  Gram g = zero_gram(*a, 1);
  g(0, 0) = a->basis(1);  // s(x, x) = g, but s(xg, x) must equal g^-1 s(x, x)
  try {
    form_validate(v, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSesquilinear);
  }
  g(0, 0) = testutil::vec(a->field(), {1, 1});
  EXPECT_NO_THROW(form_validate(v, g));
}

TEST(Form, AdjointsOverTheBaseField) {
  const Field k = Field::prime(5);
  const SesqForm s = kform(k, 2, {1, 2, 3, 4});
  // Columns are images: column j of s_l is s(e_j, -), i.e. row j of G.
  EXPECT_EQ(left_adjoint(s).matrix, testutil::mat(k, 2, 2, {1, 3, 2, 4}));
  EXPECT_EQ(right_adjoint(s).matrix, testutil::mat(k, 2, 2, {1, 2, 3, 4}));
  EXPECT_TRUE(unimodular_check(s));
  EXPECT_FALSE(unimodular_check(kform(k, 2, {1, 2, 2, 4})));
}

TEST(Form, RightAdjointFactorsThroughEvaluation) {
  // s_r = s_l* e_V on seeded forms over every fixture algebra.
  for (const auto& na : testutil::fixture_algebras())
    for (const auto& v : testutil::fixture_modules_upto4(na.algebra))
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const SesqForm s = random_form(v, seed);
        const ModuleHom sl = left_adjoint(s);
        const Matrix rhs = dual_hom(sl).matrix * double_dual_map(v).matrix;
        EXPECT_EQ(right_adjoint(s).matrix, rhs) << na.name;
      }
}

TEST(Form, GramFromLeftAdjointInverts) {
  for (const auto& na : testutil::fixture_algebras())
    for (const auto& v : testutil::fixture_modules_upto4(na.algebra)) {
      const SesqForm s = random_form(v, 5);
      EXPECT_EQ(gram_from_left_adjoint(v, left_adjoint(s).matrix), s.gram) << na.name;
    }
}

TEST(Form, RandomFormsAreDeterministicAndValid) {
  const AlgebraPtr a = matrix_algebra(Field::prime(3), 2);
  const ModulePtr v = row_module(a, 2);
  const SesqForm s1 = random_form(v, 42, true), s2 = random_form(v, 42, true);
  EXPECT_EQ(s1.gram, s2.gram);
  EXPECT_TRUE(is_sesquilinear(*v, s1.gram));
  EXPECT_TRUE(unimodular_check(s1));
}

TEST(Form, FormSpaceOverRowModuleIsOneMatrixDimension) {
  // Sesquilinear forms on k^2 over M_2(k) with transpose: s(x, y) = c x^T y.
  const AlgebraPtr a = matrix_algebra(Field::prime(3), 2);
  EXPECT_EQ(form_space(*row_module(a, 2)).size(), 1u);
}

TEST(Form, TransportIsAnIsometry) {
  const AlgebraPtr a = group_ring(Field::prime(5), cyclic_group(2));
  const SesqForm s = random_form(regular_module(a), 3);
  const Matrix p = testutil::mat(a->field(), 2, 2, {1, 2, 0, 1});
  const SesqForm t = transport(s, p);
  EXPECT_TRUE(is_isometry(as_system(s), as_system(t), p));
  EXPECT_TRUE(is_isometry_adjoint(as_system(s), as_system(t), p));
}

TEST(Form, OrthogonalSumAndRestriction) {
  const Field k = Field::prime(3);
  const SesqForm s = orth_sum(kform(k, 1, {1}), kform(k, 1, {2}));
  EXPECT_EQ(s.gram, kform(k, 2, {1, 0, 0, 2}).gram);
  const SesqForm r = restrict_form(s, {testutil::vec(k, {0, 1})});
  EXPECT_EQ(r.gram, kform(k, 1, {2}).gram);
}

TEST(Form, ScalarExtension) {
  const Field k = Field::prime(3), ext = Field::extension_of_degree(3, 2);
  const SesqForm s = kform(k, 1, {2});
  const SesqForm t = form_extend(s, ext);
  EXPECT_EQ(t.module->field(), ext);
  EXPECT_EQ(t.gram(0, 0)[0], ext.from_int(2));
  EXPECT_THROW(form_extend(s, Field::prime(5)), Error);
}

TEST(Form, GBilinearCorrespondenceRoundTrips) {
  for (const auto& grp_field : {std::pair{3, 2}, std::pair{2, 3}}) {
    const AlgebraPtr a = group_ring(Field::prime(grp_field.first), cyclic_group(grp_field.second));
    for (const auto& v : testutil::fixture_modules_upto4(a))
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const GBilinearForm b = random_gbilinear(v, seed);
        const SesqForm s = gbilinear_to_sesq(b);
        EXPECT_EQ(sesq_to_gbilinear(s).gram, b.gram);
        EXPECT_EQ(gbilinear_to_sesq(sesq_to_gbilinear(s)).gram, s.gram);
      }
  }
}

TEST(Form, NonInvariantBilinearRejected) {
  const AlgebraPtr a = group_ring(Field::prime(3), cyclic_group(2));
  try {
    gbilinear_validate(regular_module(a), testutil::mat(a->field(), 2, 2, {1, 0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
  }
}

TEST(Form, CrossGramDetectsOrthogonality) {
  const Field k = Field::prime(3);
  const SesqForm s = kform(k, 2, {1, 1, 0, 1});
  const AlgebraPtr a = base_algebra(k);
  const Matrix e = testutil::mat(k, 2, 2, {1, 0, 0, 0}), f = testutil::mat(k, 2, 2, {0, 0, 0, 1});
  EXPECT_NE(cross_gram(s.module->alg(), s.gram, e, f), zero_gram(*a, 2));
  EXPECT_EQ(cross_gram(s.module->alg(), s.gram, f, e), zero_gram(*a, 2));
}
