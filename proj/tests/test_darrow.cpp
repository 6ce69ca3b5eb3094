#include <gtest/gtest.h>

#include "common.hpp"

using namespace sesq;
using testutil::kform;

TEST(DoubleArrow, HermitianRoundTripOnFixtureAlgebras) {
  for (const auto& na : testutil::fixture_algebras())
    for (const auto& v : testutil::fixture_modules_upto4(na.algebra))
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const SesqForm s = random_form(v, seed);
        const HermitianObject q = q_of_form(s);
        EXPECT_TRUE(herm_check(q.object, q.form)) << na.name;
        const SesqSystem back = form_of_herm(q.object, q.form);
        ASSERT_EQ(back.grams.size(), 1u);
        EXPECT_EQ(back.grams[0], s.gram) << na.name;
      }
}

TEST(DoubleArrow, LiteralConventionGivesSigmaTranspose) {
  const AlgebraPtr a = group_ring(Field::prime(3), cyclic_group(2));
  const SesqForm s = random_form(regular_module(a), 9);
  const HermitianObject q = q_of_form(s);
  const SesqSystem lit = form_of_herm(q.object, q.form, GConvention::Literal);
  EXPECT_EQ(lit.grams[0], sigma_transpose(*a, s.gram));
}

TEST(DoubleArrow, DualIsAnInvolutionOnObjects) {
  const SesqForm s = kform(Field::prime(5), 2, {1, 2, 0, 3});
  const DoubleArrow m = q_of_form(s).object;
  const DoubleArrow dd = da_dual(da_dual(m));
  EXPECT_EQ(dd.V->dim(), m.V->dim());
  EXPECT_TRUE(da_morphism_check(m, dd, da_evaluation(m)));
}

TEST(DoubleArrow, NonHermitianPairRejected) {
  const SesqForm s = kform(Field::prime(3), 1, {1});
  const HermitianObject q = q_of_form(s);
  HermPair bad = q.form;
  bad.psi = Field::prime(3).from_int(2) * bad.psi;
  try {
    form_of_herm(q.object, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
}

TEST(DoubleArrow, IsometriesBecomeHermitianIsomorphisms) {
  const Field k = Field::prime(3);
  const SesqForm s = kform(k, 2, {1, 0, 0, 1}), t = kform(k, 2, {2, 0, 0, 2});
  const Matrix phi = testutil::mat(k, 2, 2, {1, 1, 1, 2});
  const DAMorphism f = f_on_morphism(as_system(s), as_system(t), phi);
  const HermitianObject qs = q_of_form(s), qt = q_of_form(t);
  EXPECT_TRUE(da_morphism_check(qs.object, qt.object, f));
  // Transporting t's hermitian form back along f recovers s's.
  EXPECT_EQ(herm_pushforward(qt.object, qt.form, qs.object, da_inverse(f)), qs.form);
  EXPECT_THROW(f_on_morphism(as_system(s), as_system(t), Matrix::identity(k, 2)), Error);
}

TEST(DoubleArrow, PushforwardOfTwoToOne) {
  // q(<2>) -> q(<1>) along (2, 1) carries (1, 1) to (2, 2).
  const Field k = Field::prime(3);
  const HermitianObject q1 = q_of_form(kform(k, 1, {1})), q2 = q_of_form(kform(k, 1, {2}));
  const DAMorphism phi{testutil::mat(k, 1, 1, {2}), testutil::mat(k, 1, 1, {1})};
  ASSERT_TRUE(da_morphism_check(q2.object, q1.object, phi));
  const HermPair eta = herm_pushforward(q2.object, q2.form, q1.object, phi);
  EXPECT_EQ(eta.phi, testutil::mat(k, 1, 1, {2}));
  EXPECT_EQ(eta.psi, testutil::mat(k, 1, 1, {2}));
  EXPECT_TRUE(herm_check(q1.object, eta));
}

TEST(DoubleArrow, IsomorphismSearch) {
  const Field k = Field::prime(3);
  const auto q1 = q_of_form(kform(k, 1, {1})), q2 = q_of_form(kform(k, 1, {2}));
  EXPECT_EQ(da_isomorphic(q2.object, q1.object, testutil::kCap).status, SearchStatus::Found);
  const auto qa = q_of_form(kform(k, 2, {0, 1, 2, 0})), qb = q_of_form(kform(k, 2, {1, 0, 0, 1}));
  EXPECT_EQ(da_isomorphic(qa.object, qb.object, testutil::kCap).status, SearchStatus::None);
}

TEST(DoubleArrow, RationalSearchReportsUndecidedNotNone) {
  const Field q = Field::rational();
  const auto qa = q_of_form(kform(q, 1, {1})), qb = q_of_form(kform(q, 1, {0}));
  const IsoSearch r = da_isomorphic(qa.object, qb.object, testutil::kCap, 20, 1);
  EXPECT_EQ(r.status, SearchStatus::Undecided);
  const auto qc = q_of_form(kform(q, 1, {2}));
  EXPECT_EQ(da_isomorphic(qa.object, qc.object, testutil::kCap, 20, 1).status, SearchStatus::Found);
}

TEST(DoubleArrow, SystemsUseOneArrowPairPerMember) {
  const Field k = Field::prime(3);
  const SesqForm a = kform(k, 2, {1, 0, 0, 1}), b = kform(k, 2, {0, 1, 2, 0});
  const SesqSystem sys{a.module, {a.gram, b.gram}};
  const HermitianObject q = q_of_form(sys);
  EXPECT_EQ(q.object.arrows.size(), 2u);
  EXPECT_EQ(form_of_herm(q.object, q.form).grams, sys.grams);
}
