// Command-line front end for the sesq library.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sesq/sesq.hpp"

namespace {

using sesq::io::json;

constexpr int kOk = 0;
constexpr int kViolation = 2;
constexpr int kUndecided = 3;
constexpr int kUsage = 64;
constexpr int kInvalid = 65;

std::uint64_t default_cap() {
  if (const char* env = std::getenv("SESQ_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("SESQ_CAP", "not a non-negative integer");
    }
  }
  return 1000000;
}

/// "Q", a field order ("3", "9", "F_27"), or a field descriptor file.
sesq::Field field_from_arg(std::string s) {
  if (s == "Q" || s == "rational") return sesq::Field::rational();
  if (s.rfind("F_", 0) == 0) s = s.substr(2);
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
    const std::uint64_t q = std::stoull(s);
    if (q < 2) throw sesq::Error(sesq::ErrorKind::NotPrime, s);
    for (std::uint64_t p = 2; p <= q; ++p) {
      if (q % p) continue;
      std::uint32_t deg = 0;
      std::uint64_t r = q;
      while (r % p == 0) r /= p, ++deg;
      if (r != 1) throw sesq::Error(sesq::ErrorKind::NotPrime, s + " is not a prime power");
      return deg == 1 ? sesq::Field::prime(p) : sesq::Field::extension_of_degree(p, deg);
    }
  }
  return sesq::io::field_from_json(sesq::io::read_file(s));
}

/// "C<n>" for a cyclic group, otherwise a group file.
sesq::Group group_from_arg(const std::string& s) {
  if (s.size() > 1 && s[0] == 'C' && s.find_first_not_of("0123456789", 1) == std::string::npos)
    return sesq::cyclic_group(std::stoul(s.substr(1)));
  return sesq::io::group_from_json(sesq::io::read_file(s));
}

struct Output {
  bool as_json = false;

  void document(const json& j) const { std::cout << sesq::io::dump(j); }

  void report(const json& j) const {
    if (as_json) {
      document(j);
      return;
    }
    for (const auto& [key, value] : j.items())
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
};

int decision_exit(const sesq::DecisionReport& r) {
  return r.verdict == sesq::Verdict::Undecided ? kUndecided : kOk;
}

int suite_exit(const sesq::SuiteReport& r) {
  if (r.violations) return kViolation;
  return r.undecided ? kUndecided : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sesquilinear forms over algebras with involution"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t cap = 0;
  int code = kOk;
  try {
    cap = default_cap();
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  app.add_flag("--json", out.as_json, "Emit JSON reports");
  app.add_option("--cap", cap, "Enumeration cap (default 10^6 or $SESQ_CAP)");

  std::string file_a, file_b, field_arg, group_arg, method = "bruteforce";
  std::uint64_t seed = 0, trials = 100, deg = 3;
  std::size_t max_dim = 2;
  bool unimodular = false, literal = false;

  auto one_file = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file_a)->required();
    return c;
  };
  auto* validate = one_file("validate", "Load and validate any document");
  auto* canon = one_file("canon", "Print the canonical form of a document");
  auto* adjoints = one_file("adjoints", "Left and right adjoints of a form");
  auto* qobject = one_file("qobject", "Hermitian double-arrow object of a form or system");
  auto* gback = one_file("gform", "Recover the form of a hermitian object");
  gback->add_flag("--literal", literal, "Use the g-arrow convention");
  auto* endoring = one_file("endoring", "Endomorphism ring of q(s) with its involution");
  auto* classes = one_file("classes", "Hermitian classes of the endomorphism ring of q(s)");
  auto* summands = one_file("summands", "Isometry classes of orthogonal summands");
  auto* g2s = one_file("g2s", "G-bilinear form to sesquilinear form");
  auto* s2g = one_file("s2g", "Sesquilinear form to G-bilinear form");

  auto* isometry = app.add_subcommand("isometry", "Decide isometry of two forms or systems");
  isometry->add_option("a", file_a)->required();
  isometry->add_option("b", file_b)->required();
  isometry->add_option("--method", method)->check(CLI::IsMember({"bruteforce", "transfer", "backtrack"}));

  auto* witt = app.add_subcommand("witt", "Seeded Witt cancellation trials");
  witt->add_option("--field", field_arg)->required();
  witt->add_option("--trials", trials);
  witt->add_option("--seed", seed);
  witt->add_option("--dim", max_dim, "Largest module dimension over the field");

  auto* springer = app.add_subcommand("springer", "Compare isometry over F_p and F_{p^d}");
  springer->add_option("a", file_a)->required();
  springer->add_option("b", file_b)->required();
  springer->add_option("--deg", deg)->check(CLI::PositiveNumber);

  auto* groupring = app.add_subcommand("groupring", "Group algebra k[G] with g -> g^-1");
  groupring->add_option("group", group_arg)->required();
  groupring->add_option("--field", field_arg)->required();

  auto* random_form = one_file("random-form", "Seeded random form on a module");
  random_form->add_option("--seed", seed);
  random_form->add_flag("--unimodular", unimodular);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    namespace io = sesq::io;
    if (validate->parsed()) {
      const auto x = io::load_any(io::read_file(file_a));
      out.report({{"status", "ok"}, {"kind", std::string(io::kind_name(x))}});
    } else if (canon->parsed()) {
      out.document(io::save_any(io::load_any(io::read_file(file_a))));
    } else if (adjoints->parsed()) {
      const auto s = io::form_from_json(io::read_file(file_a));
      out.document({{"left", io::matrix_to_json(sesq::left_adjoint(s).matrix)},
                    {"right", io::matrix_to_json(sesq::right_adjoint(s).matrix)},
                    {"unimodular", sesq::unimodular_check(s)}});
    } else if (qobject->parsed()) {
      out.document(io::hermitian_to_json(sesq::q_of_form(io::forms_from_json(io::read_file(file_a)))));
    } else if (gback->parsed()) {
      const auto q = io::hermitian_from_json(io::read_file(file_a));
      const auto mode = literal ? sesq::GConvention::Literal : sesq::GConvention::LeftAdjoint;
      const auto s = sesq::form_of_herm(q.object, q.form, mode);
      out.document(s.grams.size() == 1 ? io::form_to_json({s.module, s.grams[0]}) : io::system_to_json(s));
    } else if (endoring->parsed() || classes->parsed()) {
      const auto q = sesq::q_of_form(io::forms_from_json(io::read_file(file_a)));
      const auto e = sesq::induced_involution(sesq::endo_compute(q.object), q.form);
      if (endoring->parsed()) out.document(io::endoring_to_json(e));
      else out.report(io::classes_to_json(sesq::herm_classes(*e.algebra, cap), e.field()));
    } else if (summands->parsed()) {
      const auto cls = sesq::summand_enumerate(io::form_from_json(io::read_file(file_a)), cap);
      if (out.as_json) {
        out.document(io::summands_to_json(cls));
      } else {
        json dims = json::array();
        for (const auto& c : cls) dims.push_back(c.form.module->dim());
        out.report({{"count", cls.size()}, {"dims", dims}});
      }
    } else if (g2s->parsed()) {
      out.document(io::form_to_json(sesq::gbilinear_to_sesq(io::bilinear_from_json(io::read_file(file_a)))));
    } else if (s2g->parsed()) {
      out.document(io::bilinear_to_json(sesq::sesq_to_gbilinear(io::form_from_json(io::read_file(file_a)))));
    } else if (isometry->parsed()) {
      const auto s = io::forms_from_json(io::read_file(file_a));
      const auto t = io::forms_from_json(io::read_file(file_b));
      const auto r = method == "transfer"    ? sesq::isometry_transfer(s, t, cap)
                     : method == "backtrack" ? sesq::isometry_backtrack(s, t, cap)
                                             : sesq::isometry_bruteforce(s, t, cap);
      out.report(io::decision_to_json(r));
      code = decision_exit(r);
    } else if (witt->parsed()) {
      const auto r = sesq::witt_cancellation_check(field_from_arg(field_arg), max_dim, trials, seed, cap);
      out.report(io::suite_to_json(r));
      code = suite_exit(r);
    } else if (springer->parsed()) {
      const auto r = sesq::springer_check(io::form_from_json(io::read_file(file_a)),
                                          io::form_from_json(io::read_file(file_b)), deg, cap);
      out.report(io::suite_to_json(r));
      code = suite_exit(r);
    } else if (groupring->parsed()) {
      out.document(io::algebra_to_json(*sesq::group_ring(field_from_arg(field_arg), group_from_arg(group_arg))));
    } else if (random_form->parsed()) {
      const auto v = io::module_from_json(io::read_file(file_a));
      out.document(io::form_to_json(sesq::random_form(v, seed, unimodular)));
    }
  } catch (const sesq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == sesq::ErrorKind::EnumTooLarge ? kUndecided : kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kInvalid;
  }
  return code;
}
