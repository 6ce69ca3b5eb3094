// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "common.hpp"

using namespace sesq;
using testutil::kCap;
using testutil::kform;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// The 200 seeded forms shared by criteria 1-3.
std::vector<SesqForm> seeded_forms() {
  std::vector<ModulePtr> pool;
  for (const auto& na : testutil::fixture_algebras())
    for (const auto& v : testutil::fixture_modules_upto4(na.algebra))
      if (v->dim() <= 4) pool.push_back(v);
  std::vector<SesqForm> out;
  for (std::uint64_t i = 0; i < 200; ++i) out.push_back(random_form(pool[i % pool.size()], derive_seed(2024, i)));
  return out;
}

Outcome round_trip() {
  const auto t0 = Clock::now();
  std::size_t bad = 0;
  const auto forms = seeded_forms();
  for (const auto& s : forms) {
    const HermitianObject q = q_of_form(s);
    const SesqSystem back = form_of_herm(q.object, q.form);
    if (back.grams.size() != 1 || back.grams[0] != s.gram) ++bad;
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << forms.size() << " forms, " << bad << " mismatches, " << secs << " s";
  return {bad == 0 && secs < 30, os.str()};
}

Outcome right_adjoint_identity() {
  std::size_t bad = 0;
  const auto forms = seeded_forms();
  for (const auto& s : forms) {
    const Matrix rhs = dual_hom(left_adjoint(s)).matrix * double_dual_map(s.module).matrix;
    if (right_adjoint(s).matrix != rhs) ++bad;
  }
  return {bad == 0, std::to_string(forms.size()) + " forms, " + std::to_string(bad) + " mismatches"};
}

Outcome hermitian_images() {
  std::size_t bad = 0, modules = 0;
  const auto forms = seeded_forms();
  for (const auto& s : forms) {
    const HermitianObject q = q_of_form(s);
    bool ok = false;
    try {
      ok = herm_check(q.object, q.form);
    } catch (const Error&) {
    }
    if (!ok || !da_invertible(q.form)) ++bad;
  }
  for (const auto& na : testutil::fixture_algebras())
    for (const auto& v : testutil::fixture_modules_upto4(na.algebra)) {
      ++modules;
      const ModulePtr vd = v->dual().module;
      if (dual_hom(double_dual_map(v)).matrix * double_dual_map(vd).matrix != Matrix::identity(v->field(), vd->dim()))
        ++bad;
    }
  return {bad == 0, std::to_string(forms.size()) + " forms, " + std::to_string(modules) + " modules, " +
                        std::to_string(bad) + " failures"};
}

Outcome transfer_agreement() {
  const auto fam = testutil::f3_unimodular_family();
  std::size_t pairs = 0, disagree = 0;
  for (const auto& s : fam)
    for (const auto& t : fam) {
      ++pairs;
      if (isometry_transfer(s, t, kCap).verdict != isometry_bruteforce(s, t, kCap).verdict) ++disagree;
    }
  const Field k = Field::prime(3);
  const HermitianObject q0 = q_of_form(kform(k, 1, {1}));
  const EndoRing e = induced_involution(endo_compute(q0.object), q0.form);
  const std::size_t classes = herm_classes(*e.algebra, kCap).size();
  std::ostringstream os;
  os << fam.size() << " forms, " << pairs << " pairs, " << disagree << " disagreements, |H| = " << classes;
  return {disagree == 0 && classes == 2, os.str()};
}

Outcome witt() {
  std::ostringstream os;
  bool ok = true;
  for (std::uint32_t p : {3u, 5u}) {
    const auto r = witt_cancellation_check(Field::prime(p), 2, 100, 1, kCap);
    ok = ok && r.trials == 100 && r.violations == 0 && r.undecided == 0;
    os << "F_" << p << ": " << r.trials << " trials, " << r.violations << " violations, " << r.undecided
       << " undecided, " << r.counts.at("sums_isometric") << " isometric sums; ";
  }
  return {ok, os.str()};
}

Outcome springer() {
  const auto t0 = Clock::now();
  const Field k = Field::prime(3);
  const SesqForm one = kform(k, 1, {1}), two = kform(k, 1, {2});
  const auto d3 = springer_check(one, two, 3, kCap);
  const auto d2 = springer_check(one, two, 2, kCap);
  const bool iso27 = d3.info.at("extension_verdict") == "isometric";
  const bool iso9 = d2.info.at("extension_verdict") == "isometric";
  const bool base = d3.info.at("base_verdict") == "isometric";
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << "F_3 " << base << ", F_27 " << iso27 << ", F_9 " << iso9 << ", " << secs << " s";
  return {!base && !iso27 && iso9 && d3.violations == 0 && secs < 5, os.str()};
}

Outcome group_ring_bridge() {
  std::size_t bad = 0, n = 0;
  for (const auto& [p, order] : {std::pair{3u, 2u}, std::pair{2u, 3u}}) {
    const AlgebraPtr a = group_ring(Field::prime(p), cyclic_group(order));
    auto modules = testutil::fixture_modules_upto4(a);
    for (std::uint64_t i = 0; i < 100; ++i, ++n) {
      const GBilinearForm b = random_gbilinear(modules[i % modules.size()], derive_seed(11, i));
      const SesqForm s = gbilinear_to_sesq(b);
      if (sesq_to_gbilinear(s).gram != b.gram || gbilinear_to_sesq(sesq_to_gbilinear(s)).gram != s.gram) ++bad;
    }
  }
  const AlgebraPtr a = group_ring(Field::prime(3), cyclic_group(2));
  std::vector<GBilinearForm> fam;
  for (const auto& v : fixture_modules(a, 1))
    for (std::int64_t c = 0; c < 3; ++c) fam.push_back(gbilinear_validate(v, testutil::mat(a->field(), 1, 1, {c})));
  std::size_t mismatch = 0;
  for (const auto& b : fam)
    for (const auto& b2 : fam)
      if (gbilinear_isometry_bruteforce(b, b2, kCap).verdict !=
          isometry_bruteforce(gbilinear_to_sesq(b), gbilinear_to_sesq(b2), kCap).verdict)
        ++mismatch;
  std::ostringstream os;
  os << n << " invariant forms, " << bad << " round-trip failures; rank-1 family " << fam.size() << " forms, "
     << mismatch << " verdict mismatches";
  return {bad == 0 && mismatch == 0, os.str()};
}

Outcome radical_reduction() {
  const AlgebraPtr f2c2 = group_ring(Field::prime(2), cyclic_group(2));
  const auto rad2 = radical(*f2c2, kCap);
  bool ok = rad2.size() == 1 && rad2[0] == testutil::vec(f2c2->field(), {1, 1});
  ok = ok && radical(*group_ring(Field::prime(3), cyclic_group(2)), kCap).empty();

  const Field f3 = Field::prime(3), f5 = Field::prime(5);
  const AlgebraPtr f3c2 = group_ring(f3, cyclic_group(2)), f3c3 = group_ring(f3, cyclic_group(3));
  const std::vector<SesqForm> fixtures = {
      kform(f3, 1, {1}),
      kform(f3, 2, {1, 0, 0, 2}),
      kform(f3, 2, {1, 0, 0, 0}),
      kform(f3, 2, {0, 1, 0, 0}),
      kform(f5, 2, {1, 0, 0, 1}),
      random_form(regular_module(f3c2), 4),
      random_form(fixture_modules(f3c3, 2)[1], 2),
      random_form(regular_module(f3c3), 5),
      random_form(row_module(matrix_algebra(f3, 2), 2), 3, true),
  };
  std::ostringstream os;
  std::size_t with_radical = 0, agree = 0;
  for (const auto& s : fixtures) {
    const HermitianObject q = q_of_form(s);
    const EndoRing e = induced_involution(endo_compute(q.object), q.form);
    const auto rad = radical(*e.algebra, kCap);
    if (!rad.empty()) ++with_radical;
    const std::size_t ce = herm_classes(*e.algebra, kCap).size();
    const std::size_t cq = herm_classes(*quotient_radical(*e.algebra, kCap), kCap).size();
    if (ce == cq) ++agree;
    os << ce << "/" << cq << " ";
  }
  ok = ok && agree == fixtures.size() && with_radical > 0;
  return {ok, "rad(F_2[C_2]) = span(e+g), rad(F_3[C_2]) = 0; E/rad class counts " + os.str() + "(" +
                  std::to_string(with_radical) + " rings with nonzero radical)"};
}

Outcome summands() {
  const Field k = Field::prime(3);
  const SesqForm whole = kform(k, 2, {1, 0, 0, 2});
  const auto cls = summand_enumerate(whole, kCap);
  // Each expected class must match exactly one enumerated class.
  const std::vector<SesqForm> expected = {testutil::kform(k, 0, {}), kform(k, 1, {1}), kform(k, 1, {2}), whole};
  bool ok = cls.size() == expected.size();
  for (const auto& want : expected) {
    std::size_t hits = 0;
    for (const auto& c : cls)
      if (c.form.module->dim() == want.module->dim() &&
          isometry_bruteforce(c.form, want, kCap).verdict == Verdict::Isometric)
        ++hits;
    ok = ok && hits == 1;
  }
  return {ok, std::to_string(cls.size()) + " classes"};
}

Outcome determinism() {
  auto run = [] {
    std::string out;
    for (std::uint32_t p : {3u, 5u}) out += io::dump(io::suite_to_json(witt_cancellation_check(Field::prime(p), 2, 100, 1, kCap)));
    const Field k = Field::prime(3);
    for (std::size_t d : {2u, 3u}) out += io::dump(io::suite_to_json(springer_check(kform(k, 1, {1}), kform(k, 1, {2}), d, kCap)));
    out += io::dump(io::summands_to_json(summand_enumerate(kform(k, 2, {1, 0, 0, 2}), kCap)));
    for (const auto& s : seeded_forms()) out += io::dump(io::form_to_json(s));
    out += io::dump(io::decision_to_json(isometry_transfer(kform(k, 2, {1, 0, 0, 1}), kform(k, 2, {2, 0, 0, 2}), kCap)));
    return out;
  };
  const std::string a = run(), b = run();
  return {a == b, std::to_string(a.size()) + " bytes compared"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"round trip G(F(s)) = s", round_trip},
      {"s_r = s_l* e_V", right_adjoint_identity},
      {"hermitian images and unit identity", hermitian_images},
      {"transfer agrees with brute force over F_3", transfer_agreement},
      {"Witt cancellation over F_3 and F_5", witt},
      {"Springer descent over F_27 and F_9", springer},
      {"G-bilinear correspondence", group_ring_bridge},
      {"radical reduction", radical_reduction},
      {"summand classes of <1> + <2>", summands},
      {"deterministic reports", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failures ? 1 : 0;
}
