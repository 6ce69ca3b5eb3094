// Regenerates the canonical fixture gallery: make_fixtures <dir>

#include <iostream>
#include <string>

#include "sesq/sesq.hpp"

using namespace sesq;
using io::json;

namespace {

SesqForm scalar_form(const Field& k, std::size_t n, std::initializer_list<std::int64_t> entries) {
  const AlgebraPtr a = base_algebra(k);
  Vec flat;
  for (auto x : entries) flat.push_back(k.from_int(x));
  return form_validate(free_base_module(a, n), scalar_gram(*a, Matrix::from_flat(k, n, n, flat)));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 64;
  }
  const std::string dir = argv[1];
  auto put = [&](const std::string& name, const json& j) { io::write_file(dir + "/" + name, io::dump(j)); };

  const Field f2 = Field::prime(2), f3 = Field::prime(3), f5 = Field::prime(5);
  put("f3_field.json", io::field_to_json(f3));
  put("f9_field.json", io::field_to_json(Field::extension_of_degree(3, 2)));
  put("c3_group.json", io::group_to_json(cyclic_group(3)));

  put("f2_diag.json", io::form_to_json(scalar_form(f2, 2, {1, 0, 0, 1})));
  put("f2_antidiag.json", io::form_to_json(scalar_form(f2, 2, {0, 1, 1, 0})));
  put("f3_one.json", io::form_to_json(scalar_form(f3, 1, {1})));
  put("f3_two.json", io::form_to_json(scalar_form(f3, 1, {2})));
  put("f3_rank1.json", io::form_to_json(scalar_form(f3, 1, {1})));
  put("f3_diag11.json", io::form_to_json(scalar_form(f3, 2, {1, 0, 0, 1})));
  put("f3_diag22.json", io::form_to_json(scalar_form(f3, 2, {2, 0, 0, 2})));
  put("f3_sum12.json", io::form_to_json(scalar_form(f3, 2, {1, 0, 0, 2})));
  put("f3_hyperbolic.json", io::form_to_json(scalar_form(f3, 2, {0, 1, 2, 0})));
  put("f5_diag12.json", io::form_to_json(scalar_form(f5, 2, {1, 0, 0, 2})));
  put("f3_one_qobject.json", io::hermitian_to_json(q_of_form(scalar_form(f3, 1, {1}))));

  const SesqForm d11 = scalar_form(f3, 2, {1, 0, 0, 1});
  const SesqForm alt = scalar_form(f3, 2, {0, 1, 2, 0});
  put("f3_system.json", io::system_to_json({d11.module, {d11.gram, alt.gram}}));

  const AlgebraPtr f3c2 = group_ring(f3, cyclic_group(2));
  const AlgebraPtr f2c3 = group_ring(f2, cyclic_group(3));
  const AlgebraPtr m2 = matrix_algebra(f3, 2);
  put("f3c2_algebra.json", io::algebra_to_json(*f3c2));
  put("f3c2_regular.json", io::module_to_json(*regular_module(f3c2)));
  put("f2c3_regular.json", io::module_to_json(*regular_module(f2c3)));
  put("m2f3_rows.json", io::module_to_json(*row_module(m2, 2)));

  const auto triv = trivial_module(f3c2);
  put("f3c2_triv_bilinear.json", io::bilinear_to_json(gbilinear_validate(triv, Matrix::identity(f3, 1))));
  put("f3c2_regular_bilinear.json", io::bilinear_to_json(random_gbilinear(regular_module(f3c2), 7)));
  put("f3c2_regular_form.json", io::form_to_json(random_form(regular_module(f3c2), 11, true)));
  put("f2c3_regular_form.json", io::form_to_json(random_form(regular_module(f2c3), 13, true)));
  put("m2f3_rows_form.json", io::form_to_json(random_form(row_module(m2, 2), 17, true)));

  // Not associative: (x x) y = y y = 0 but x (x y) = x x = y.
  json bad = io::algebra_to_json(*base_algebra(f3));
  bad["dim"] = 3;
  bad["basis"] = {"e", "x", "y"};
  bad["unit"] = {"1", "0", "0"};
  const json e = {"1", "0", "0"}, x = {"0", "1", "0"}, y = {"0", "0", "1"}, z = {"0", "0", "0"};
  bad["structure"] = {{e, x, y}, {x, y, x}, {y, z, z}};
  bad["involution"] = {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
  put("bad_algebra.json", bad);
  return 0;
}
