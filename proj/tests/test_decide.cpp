#include <gtest/gtest.h>

#include "common.hpp"

using namespace sesq;
using testutil::kCap;
using testutil::kform;

TEST(Decide, AlternatingVersusDiagonalOverF2) {
  const Field k = Field::prime(2);
  const SesqForm d = kform(k, 2, {1, 0, 0, 1}), h = kform(k, 2, {0, 1, 1, 0});
  for (const auto& r : {isometry_bruteforce(d, h, kCap), isometry_backtrack(d, h, kCap), isometry_transfer(d, h, kCap)})
    EXPECT_EQ(r.verdict, Verdict::NotIsometric) << r.method;
  EXPECT_EQ(isometry_bruteforce(d, h, kCap).search_size, 16u);
}

TEST(Decide, ScaledIdentityOverF3) {
  const Field k = Field::prime(3);
  const SesqForm a = kform(k, 2, {1, 0, 0, 1}), b = kform(k, 2, {2, 0, 0, 2});
  EXPECT_TRUE(is_isometry_adjoint(as_system(a), as_system(b), testutil::mat(k, 2, 2, {1, 1, 1, 2})));
  for (const auto& r : {isometry_bruteforce(a, b, kCap), isometry_backtrack(a, b, kCap), isometry_transfer(a, b, kCap)}) {
    ASSERT_EQ(r.verdict, Verdict::Isometric) << r.method;
    EXPECT_TRUE(is_isometry_adjoint(as_system(a), as_system(b), *r.witness));
  }
}

TEST(Decide, SelfIsometryHasIdentityWitness) {
  const SesqForm s = kform(Field::prime(5), 2, {1, 2, 3, 4});
  const auto r = isometry_bruteforce(s, s, kCap);
  ASSERT_EQ(r.verdict, Verdict::Isometric);
  EXPECT_EQ(isometry_transfer(s, s, kCap).verdict, Verdict::Isometric);
}

TEST(Decide, DifferentArrowRanksShortCircuitTransfer) {
  const Field k = Field::prime(3);
  const auto r = isometry_transfer(kform(k, 2, {1, 0, 0, 0}), kform(k, 2, {1, 0, 0, 1}), kCap);
  EXPECT_EQ(r.verdict, Verdict::NotIsometric);
}

TEST(Decide, DecidersAgreeOnRandomPairs) {
  for (const auto& na : testutil::fixture_algebras())
    for (const auto& v : testutil::fixture_modules_upto4(na.algebra)) {
      if (v->dim() > 2) continue;
      std::vector<SesqForm> forms;
      for (std::uint64_t seed = 0; seed < 4; ++seed) forms.push_back(random_form(v, seed));
      forms.push_back(transport(forms[0], Matrix::identity(v->field(), v->dim())));
      for (const auto& s : forms)
        for (const auto& t : forms) {
          const auto b = isometry_bruteforce(s, t, kCap);
          EXPECT_EQ(isometry_backtrack(s, t, kCap).verdict, b.verdict) << na.name;
          EXPECT_EQ(isometry_transfer(s, t, kCap).verdict, b.verdict) << na.name;
        }
    }
}

TEST(Decide, BacktrackHandlesLargerSumsAndPlantedIsometries) {
  const AlgebraPtr a = group_ring(Field::prime(3), cyclic_group(2));
  const ModulePtr v = direct_sum(regular_module(a), regular_module(a));
  const SesqForm s = random_form(v, 21);
  const Matrix p = testutil::mat(a->field(), 4, 4, {1, 2, 0, 1, 0, 1, 1, 0, 0, 0, 1, 2, 1, 0, 0, 1});
  ASSERT_TRUE(p.invertible());
  const SesqForm t = transport(s, p);
  const auto r = isometry_backtrack(s, t, kCap);
  ASSERT_EQ(r.verdict, Verdict::Isometric);
  EXPECT_TRUE(is_isometry(as_system(s), as_system(t), *r.witness));
}

TEST(Decide, BacktrackNodeCapGivesUndecided) {
  const SesqForm s = kform(Field::prime(5), 2, {0, 0, 0, 0});
  EXPECT_EQ(isometry_backtrack(s, s, 1).verdict, Verdict::Undecided);
}

TEST(Decide, IsometryIsAnEquivalenceOnTheF3Family) {
  const auto fam = testutil::f3_unimodular_family();
  std::vector<std::size_t> cls(fam.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    cls[i] = reps.size();
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (isometry_backtrack(fam[reps[c]], fam[i], kCap).verdict == Verdict::Isometric) {
        cls[i] = c;
        break;
      }
    if (cls[i] == reps.size()) reps.push_back(i);
  }
  // Symmetry and transitivity on a sample through the class labels.
  for (std::size_t i = 0; i < fam.size(); i += 5)
    for (std::size_t j = 0; j < fam.size(); j += 7) {
      const bool iso = isometry_backtrack(fam[i], fam[j], kCap).verdict == Verdict::Isometric;
      EXPECT_EQ(iso, cls[i] == cls[j]);
      EXPECT_EQ(iso, isometry_backtrack(fam[j], fam[i], kCap).verdict == Verdict::Isometric);
    }
}

TEST(Decide, InfiniteFieldPreconditions) {
  const Field q = Field::rational();
  const SesqForm s = kform(q, 1, {1}), t = kform(q, 1, {2});
  EXPECT_THROW(isometry_bruteforce(s, t, kCap), Error);
  EXPECT_THROW(isometry_transfer(s, t, kCap), Error);
  EXPECT_EQ(isometry_backtrack(s, t, kCap).verdict, Verdict::Undecided);
}

TEST(Decide, BruteforceCap) {
  const SesqForm s = kform(Field::prime(5), 2, {1, 0, 0, 1});
  try {
    isometry_bruteforce(s, s, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumTooLarge);
  }
}

TEST(Decide, SystemsRequireSimultaneousTransport) {
  const Field k = Field::prime(3);
  const SesqForm d = kform(k, 2, {1, 0, 0, 1}), alt = kform(k, 2, {0, 1, 2, 0});
  const SesqSystem s{d.module, {d.gram, alt.gram}};
  const SesqSystem t{d.module, {kform(k, 2, {2, 0, 0, 2}).gram, alt.gram}};
  const auto b = isometry_bruteforce(s, t, kCap);
  EXPECT_EQ(isometry_transfer(s, t, kCap).verdict, b.verdict);
  EXPECT_EQ(isometry_backtrack(s, t, kCap).verdict, b.verdict);
  const auto self = isometry_transfer(s, s, kCap);
  EXPECT_EQ(self.verdict, Verdict::Isometric);
}

TEST(Decide, WittSuiteOddCharacteristic) {
  const auto r = witt_cancellation_check(Field::prime(3), 2, 30, 7, kCap);
  EXPECT_EQ(r.trials, 30u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.undecided, 0u);
  EXPECT_GE(r.counts.at("sums_isometric"), r.counts.at("planted"));
  try {
    witt_cancellation_check(Field::prime(2), 2, 1, 0, kCap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicTwo);
  }
}

TEST(Decide, WittSuiteIsDeterministic) {
  const auto a = witt_cancellation_check(Field::prime(5), 2, 20, 99, kCap);
  const auto b = witt_cancellation_check(Field::prime(5), 2, 20, 99, kCap);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(io::dump(io::suite_to_json(a)), io::dump(io::suite_to_json(b)));
}

TEST(Decide, SpringerOddAndEvenDegree) {
  const Field k = Field::prime(3);
  const SesqForm one = kform(k, 1, {1}), two = kform(k, 1, {2});
  const auto odd = springer_check(one, two, 3, kCap);
  EXPECT_EQ(odd.info.at("base_verdict"), "not_isometric");
  EXPECT_EQ(odd.info.at("extension_verdict"), "not_isometric");
  EXPECT_EQ(odd.violations, 0u);
  const auto even = springer_check(one, two, 2, kCap);
  EXPECT_EQ(even.info.at("extension_verdict"), "isometric");
  EXPECT_EQ(even.violations, 0u);
  EXPECT_EQ(springer_check(one, one, 5, kCap).info.at("extension_verdict"), "isometric");
}

TEST(Decide, SummandClasses) {
  const Field k = Field::prime(3);
  const auto cls = summand_enumerate(kform(k, 2, {1, 0, 0, 2}), kCap);
  ASSERT_EQ(cls.size(), 4u);
  EXPECT_EQ(cls[0].form.module->dim(), 0u);
  // The sweep meets diag(0, 1) before diag(1, 0).
  EXPECT_EQ(cls[1].form.gram, kform(k, 1, {2}).gram);
  EXPECT_EQ(cls[2].form.gram, kform(k, 1, {1}).gram);
  EXPECT_EQ(cls[3].form.module->dim(), 2u);
  EXPECT_EQ(summand_enumerate(kform(k, 1, {1}), kCap).size(), 2u);
  EXPECT_THROW(summand_enumerate(kform(k, 2, {1, 0, 0, 2}), 10), Error);
}

TEST(Decide, EquivariantIsometryMatchesSesquilinear) {
  const AlgebraPtr a = group_ring(Field::prime(3), cyclic_group(2));
  std::vector<GBilinearForm> fam;
  for (const auto& v : fixture_modules(a, 1))
    for (std::int64_t c = 0; c < 3; ++c)
      fam.push_back(gbilinear_validate(v, testutil::mat(a->field(), 1, 1, {c})));
  for (const auto& b : fam)
    for (const auto& b2 : fam)
      EXPECT_EQ(gbilinear_isometry_bruteforce(b, b2, kCap).verdict,
                isometry_bruteforce(gbilinear_to_sesq(b), gbilinear_to_sesq(b2), kCap).verdict);
}
