#pragma once

// Canonical JSON interchange. Field elements are strings (prime fields,
// rationals "n/d") or coefficient-string arrays (extension fields). Keys are
// emitted sorted and every dump ends in a newline, so save(load(x)) == x for
// canonical files.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "sesq/decide.hpp"

namespace sesq::io {

using json = nlohmann::json;

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline std::size_t to_size(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    parse_fail("expected a non-negative integer");
  return j.get<std::size_t>();
}

// Fields ----------------------------------------------------------------------

inline json field_to_json(const Field& k) {
  switch (k.kind()) {
    case FieldKind::Prime: return {{"kind", "prime"}, {"p", k.characteristic()}};
    case FieldKind::Extension: {
      json mod = json::array();
      for (auto c : k.modulus()) mod.push_back(c);
      return {{"kind", "ext"}, {"p", k.characteristic()}, {"deg", k.degree()}, {"mod", mod}};
    }
    case FieldKind::Rational: return {{"kind", "rational"}};
  }
  return nullptr;
}

inline Field field_from_json(const json& j) {
  const json& kind = member(j, "kind");
  if (!kind.is_string()) parse_fail("field kind must be a string");
  const auto name = kind.get<std::string>();
  if (name == "rational") return Field::rational();
  if (!member(j, "p").is_number_integer()) parse_fail("p must be an integer");
  const auto p = member(j, "p").get<std::int64_t>();
  if (p < 2) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (name == "prime") return Field::prime(static_cast<std::uint64_t>(p));
  if (name != "ext") throw Error(ErrorKind::BadDescriptor, "unknown field kind " + name);
  std::vector<std::int64_t> mod;
  for (const auto& c : member(j, "mod")) {
    if (!c.is_number_integer()) parse_fail("modulus coefficients must be integers");
    mod.push_back(c.get<std::int64_t>());
  }
  if (j.contains("deg") && (mod.empty() || to_size(j.at("deg")) + 1 != mod.size()))
    throw Error(ErrorKind::BadDescriptor, "deg does not match modulus length");
  return Field::extension(static_cast<std::uint64_t>(p), mod);
}

// Elements, vectors, matrices ---------------------------------------------------

inline json elem_to_json(const Elem& x, const Field& k) {
  switch (k.kind()) {
    case FieldKind::Prime: return std::to_string(x.index());
    case FieldKind::Rational: return x.rational().str();
    case FieldKind::Extension: {
      json a = json::array();
      for (auto c : k.coeffs(x)) a.push_back(std::to_string(c));
      return a;
    }
  }
  return nullptr;
}

inline BigInt parse_int(const std::string& s) {
  static const std::string digits = "0123456789";
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || s.find_first_not_of(digits, start) != std::string::npos)
    parse_fail("not an integer: \"" + s + "\"");
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::DivisionByZero, s);
  return Rational(parse_int(s.substr(0, slash)), den);
}

inline Elem elem_from_json(const json& j, const Field& k) {
  if (j.is_number_integer()) return k.from_int(BigInt(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (k.finite() && s.find('/') == std::string::npos) return k.from_int(parse_int(s));
    return k.from_rational(parse_rational(s));
  }
  if (j.is_array() && k.kind() == FieldKind::Extension) {
    std::vector<BigInt> c;
    for (const auto& x : j) {
      if (x.is_number_integer()) c.push_back(BigInt(x.get<std::int64_t>()));
      else if (x.is_string()) c.push_back(parse_int(x.get<std::string>()));
      else parse_fail("bad extension coefficient");
    }
    return k.from_coeffs(c);
  }
  parse_fail("bad field element " + j.dump());
}

inline json vec_to_json(const Vec& v, const Field& k) {
  json a = json::array();
  for (const auto& x : v) a.push_back(elem_to_json(x, k));
  return a;
}

inline Vec vec_from_json(const json& j, const Field& k, std::size_t n) {
  if (!j.is_array() || j.size() != n) parse_fail("expected a vector of length " + std::to_string(n));
  Vec v;
  for (const auto& x : j) v.push_back(elem_from_json(x, k));
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(m(i, c), m.field()));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j, const Field& k, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) parse_fail("expected " + std::to_string(rows) + " matrix rows");
  Matrix m(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vec r = vec_from_json(j[i], k, cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

/// Square matrix of unknown size.
inline Matrix square_from_json(const json& j, const Field& k) {
  if (!j.is_array()) parse_fail("expected a matrix");
  return matrix_from_json(j, k, j.size(), j.size());
}

// Groups and algebras -------------------------------------------------------------

inline json group_to_json(const Group& g) {
  return {{"elements", g.names}, {"table", g.table}, {"unit", g.unit}};
}

inline Group group_from_json(const json& j) {
  std::vector<std::string> names;
  for (const auto& x : member(j, "elements")) {
    if (!x.is_string()) parse_fail("group element names must be strings");
    names.push_back(x.get<std::string>());
  }
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : member(j, "table")) {
    if (!row.is_array()) parse_fail("group table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(to_size(x));
    table.push_back(std::move(r));
  }
  return make_group(std::move(names), std::move(table), to_size(member(j, "unit")));
}

inline json algebra_to_json(const InvAlgebra& a) {
  const Field& k = a.field();
  json structure = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_to_json(a.product(i, j), k));
    structure.push_back(std::move(row));
  }
  json out{{"field", field_to_json(k)},
           {"dim", a.dim()},
           {"basis", a.basis_names()},
           {"unit", vec_to_json(a.unit(), k)},
           {"structure", structure},
           {"involution", matrix_to_json(a.involution())}};
  if (a.group()) out["group"] = group_to_json(*a.group());
  return out;
}

inline AlgebraPtr algebra_from_json(const json& j) {
  AlgebraData data;
  data.field = field_from_json(member(j, "field"));
  const Field& k = data.field;
  const std::size_t d = to_size(member(j, "dim"));
  for (const auto& x : member(j, "basis")) {
    if (!x.is_string()) parse_fail("basis names must be strings");
    data.basis.push_back(x.get<std::string>());
  }
  if (data.basis.size() != d) throw Error(ErrorKind::BadDimension, "basis length != dim");
  const json& st = member(j, "structure");
  if (!st.is_array() || st.size() != d) parse_fail("structure must be dim x dim");
  for (const auto& row : st) {
    if (!row.is_array() || row.size() != d) parse_fail("structure must be dim x dim");
    std::vector<Vec> r;
    for (const auto& x : row) r.push_back(vec_from_json(x, k, d));
    data.structure.push_back(std::move(r));
  }
  data.unit = vec_from_json(member(j, "unit"), k, d);
  data.involution = matrix_from_json(member(j, "involution"), k, d, d);
  if (j.contains("group")) data.group = group_from_json(j.at("group"));
  return algebra_validate(std::move(data));
}

// Modules and forms -----------------------------------------------------------------

inline json module_to_json(const RightModule& v) {
  json action = json::array();
  for (const auto& r : v.action()) action.push_back(matrix_to_json(r));
  return {{"algebra", algebra_to_json(v.alg())}, {"dim", v.dim()}, {"action", action}};
}

inline ModulePtr module_from_json(const json& j) {
  AlgebraPtr a = algebra_from_json(member(j, "algebra"));
  const std::size_t n = to_size(member(j, "dim"));
  const json& act = member(j, "action");
  if (!act.is_array() || act.size() != a->dim()) parse_fail("one action matrix per basis element");
  std::vector<Matrix> action;
  for (const auto& m : act) action.push_back(matrix_from_json(m, a->field(), n, n));
  return module_validate(std::move(a), n, std::move(action));
}

inline json gram_to_json(const Gram& g, const Field& k) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.size(); ++j) row.push_back(vec_to_json(g(i, j), k));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Gram gram_from_json(const json& j, const RightModule& v) {
  const std::size_t n = v.dim(), d = v.alg().dim();
  if (!j.is_array() || j.size() != n) throw Error(ErrorKind::NotSesquilinear, "Gram size != module dim");
  Gram g = zero_gram(v.alg(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw Error(ErrorKind::NotSesquilinear, "Gram is not square");
    for (std::size_t c = 0; c < n; ++c) g(i, c) = vec_from_json(j[i][c], v.field(), d);
  }
  return g;
}

inline json form_to_json(const SesqForm& s) {
  return {{"module", module_to_json(*s.module)}, {"gram", gram_to_json(s.gram, s.module->field())}};
}

inline SesqForm form_from_json(const json& j) {
  ModulePtr v = module_from_json(member(j, "module"));
  Gram g = gram_from_json(member(j, "gram"), *v);
  return form_validate(std::move(v), std::move(g));
}

inline json system_to_json(const SesqSystem& s) {
  json grams = json::array();
  for (const auto& g : s.grams) grams.push_back(gram_to_json(g, s.module->field()));
  return {{"module", module_to_json(*s.module)}, {"system", grams}};
}

inline SesqSystem system_from_json(const json& j) {
  ModulePtr v = module_from_json(member(j, "module"));
  std::vector<Gram> grams;
  const json& sys = member(j, "system");
  if (!sys.is_array() || sys.empty()) parse_fail("system must be a non-empty list of Gram arrays");
  for (const auto& g : sys) grams.push_back(gram_from_json(g, *v));
  return system_validate(std::move(v), std::move(grams));
}

/// A form or a system file, as a system.
inline SesqSystem forms_from_json(const json& j) {
  if (j.is_object() && j.contains("system")) return system_from_json(j);
  return as_system(form_from_json(j));
}

inline json bilinear_to_json(const GBilinearForm& b) {
  return {{"module", module_to_json(*b.module)}, {"gram_k", matrix_to_json(b.gram)}};
}

inline GBilinearForm bilinear_from_json(const json& j) {
  ModulePtr v = module_from_json(member(j, "module"));
  Matrix b = matrix_from_json(member(j, "gram_k"), v->field(), v->dim(), v->dim());
  return gbilinear_validate(std::move(v), std::move(b));
}

// Double arrows ------------------------------------------------------------------------

inline json object_to_json(const DoubleArrow& m) {
  json arrows = json::array();
  for (const auto& a : m.arrows) arrows.push_back({matrix_to_json(a.f), matrix_to_json(a.g)});
  return {{"V", module_to_json(*m.V)}, {"W", module_to_json(*m.W)}, {"arrows", arrows}};
}

inline DoubleArrow object_from_json(const json& j) {
  ModulePtr v = module_from_json(member(j, "V"));
  ModulePtr w = module_from_json(member(j, "W"));
  std::vector<ArrowPair> arrows;
  for (const auto& p : member(j, "arrows")) {
    if (!p.is_array() || p.size() != 2) parse_fail("arrow entries are [f, g] pairs");
    arrows.push_back({matrix_from_json(p[0], v->field(), w->dim(), v->dim()),
                      matrix_from_json(p[1], v->field(), w->dim(), v->dim())});
  }
  return da_validate(std::move(v), std::move(w), std::move(arrows));
}

inline json morphism_to_json(const DAMorphism& h) { return {matrix_to_json(h.phi), matrix_to_json(h.psi)}; }

inline json hermitian_to_json(const HermitianObject& q) {
  return {{"object", object_to_json(q.object)}, {"form", morphism_to_json(q.form)}};
}

inline HermitianObject hermitian_from_json(const json& j) {
  DoubleArrow m = object_from_json(member(j, "object"));
  const json& f = member(j, "form");
  if (!f.is_array() || f.size() != 2) parse_fail("form is a [phi, psi] pair");
  const DoubleArrow md = da_dual(m);
  const Field& k = m.V->field();
  HermPair h{matrix_from_json(f[0], k, md.V->dim(), m.V->dim()),
             matrix_from_json(f[1], k, md.W->dim(), m.W->dim())};
  if (!herm_check(m, h)) throw Error(ErrorKind::NotHermitian);
  return {std::move(m), std::move(h)};
}

// Reports ---------------------------------------------------------------------------------

inline json decision_to_json(const DecisionReport& r) {
  return {{"verdict", std::string(to_string(r.verdict))},
          {"method", r.method},
          {"search_size", r.search_size},
          {"witness", r.witness ? matrix_to_json(*r.witness) : json(nullptr)}};
}

inline json suite_to_json(const SuiteReport& r) {
  json ce = json::array();
  for (const auto& c : r.counterexamples) {
    json forms = json::array();
    for (const auto& f : c.forms) forms.push_back(form_to_json(f));
    ce.push_back({{"reason", c.reason}, {"forms", forms}});
  }
  return {{"suite", r.suite},           {"seed", r.seed},     {"trials", r.trials},
          {"violations", r.violations}, {"undecided", r.undecided}, {"counts", r.counts},
          {"info", r.info},             {"counterexamples", ce}};
}

inline json endoring_to_json(const EndoRing& e) {
  const Field& k = e.field();
  json basis = json::array();
  for (const auto& b : e.basis) basis.push_back(morphism_to_json(b));
  json structure = json::array();
  for (std::size_t i = 0; i < e.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < e.dim(); ++j) row.push_back(vec_to_json(e.table.c[i * e.dim() + j], k));
    structure.push_back(std::move(row));
  }
  json out{{"dim", e.dim()}, {"basis", basis}, {"structure", structure}, {"unit", vec_to_json(e.table.one, k)}};
  out["involution"] = e.algebra ? matrix_to_json(e.algebra->involution()) : json(nullptr);
  return out;
}

inline json classes_to_json(const std::vector<HermClass>& cls, const Field& k) {
  json arr = json::array();
  for (const auto& c : cls)
    arr.push_back({{"representative", vec_to_json(c.representative, k)}, {"orbit_size", c.orbit_size}});
  return {{"count", cls.size()}, {"classes", arr}};
}

inline json summands_to_json(const std::vector<SummandClass>& cls) {
  json arr = json::array();
  for (const auto& c : cls)
    arr.push_back({{"dim", c.form.module->dim()}, {"idempotents", c.idempotents}, {"form", form_to_json(c.form)}});
  return {{"count", cls.size()}, {"classes", arr}};
}

// Files ------------------------------------------------------------------------------------

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

using Loaded = std::variant<Field, AlgebraPtr, Group, ModulePtr, SesqForm, SesqSystem, GBilinearForm,
                            DoubleArrow, HermitianObject>;

/// Dispatch on the distinguishing key of each document kind.
inline Loaded load_any(const json& j) {
  if (!j.is_object()) parse_fail("top level must be an object");
  try {
    if (j.contains("gram")) return form_from_json(j);
    if (j.contains("system")) return system_from_json(j);
    if (j.contains("gram_k")) return bilinear_from_json(j);
    if (j.contains("object")) return hermitian_from_json(j);
    if (j.contains("arrows")) return object_from_json(j);
    if (j.contains("action")) return module_from_json(j);
    if (j.contains("structure")) return algebra_from_json(j);
    if (j.contains("table")) return group_from_json(j);
    if (j.contains("kind")) return field_from_json(j);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
  parse_fail("unrecognized document");
}

inline json save_any(const Loaded& x) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Field>) return field_to_json(v);
        else if constexpr (std::is_same_v<T, AlgebraPtr>) return algebra_to_json(*v);
        else if constexpr (std::is_same_v<T, Group>) return group_to_json(v);
        else if constexpr (std::is_same_v<T, ModulePtr>) return module_to_json(*v);
        else if constexpr (std::is_same_v<T, SesqForm>) return form_to_json(v);
        else if constexpr (std::is_same_v<T, SesqSystem>) return system_to_json(v);
        else if constexpr (std::is_same_v<T, GBilinearForm>) return bilinear_to_json(v);
        else if constexpr (std::is_same_v<T, DoubleArrow>) return object_to_json(v);
        else return hermitian_to_json(v);
      },
      x);
}

inline std::string_view kind_name(const Loaded& x) {
  static constexpr std::string_view names[] = {"field",  "algebra",  "group",  "module",   "form",
                                                "system", "bilinear", "object", "hermitian"};
  return names[x.index()];
}

}  // namespace sesq::io
