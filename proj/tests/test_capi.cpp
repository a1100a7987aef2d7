#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "gfdiff/gfdiff.h"

namespace {

using Json = nlohmann::json;

std::string take(char* s) {
  std::string out = s ? s : "";
  gfd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API: fields and elements") {
  CHECK(std::strlen(gfd_version()) > 0);
  gfd_field* f = nullptr;
  REQUIRE(gfd_field_create(4, "19", &f) == GFD_OK);
  CHECK(gfd_field_degree(f) == 4);
  char* s = nullptr;
  REQUIRE(gfd_field_modulus_hex(f, &s) == GFD_OK);
  CHECK(take(s) == "19");

  uint32_t a10 = 0, sq = 0, a5 = 0;
  REQUIRE(gfd_elem_pow(f, 2, 10, &a10) == GFD_OK);
  REQUIRE(gfd_elem_mul(f, a10, a10, &sq) == GFD_OK);
  REQUIRE(gfd_elem_pow(f, 2, 5, &a5) == GFD_OK);
  CHECK(sq == a5);
  int t = -1;
  REQUIRE(gfd_elem_trace(f, a10, &t) == GFD_OK);
  CHECK(t == 0);
  uint32_t x = 0;
  CHECK(gfd_elem_inv(f, 0, &x) == GFD_ERR_DIVISION_BY_ZERO);
  CHECK(std::string(gfd_last_error()).find("zero") != std::string::npos);
  CHECK(gfd_elem_mul(f, 16, 1, &x) == GFD_ERR_RANGE);
  CHECK(gfd_elem_is_cube(f, 3, 0, &t) == GFD_OK);

  int solvable = 0;
  uint32_t roots[2] = {0, 0};
  REQUIRE(gfd_solve_artin_schreier(f, 1, a5, &solvable, roots) == GFD_OK);
  CHECK(solvable == 1);
  CHECK((roots[0] ^ roots[1]) == 1);
  CHECK(gfd_solve_artin_schreier(f, 0, a5, &solvable, roots) == GFD_ERR_PRECONDITION);

  CHECK(gfd_elem_parse(f, "zz", &x) == GFD_ERR_PARSE);
  CHECK(gfd_elem_parse(nullptr, "1", &x) == GFD_ERR_NULL_ARGUMENT);
  gfd_field_destroy(f);

  gfd_field* g = nullptr;
  CHECK(gfd_field_create(4, "15", &g) == GFD_ERR_REDUCIBLE);
  CHECK(g == nullptr);
  CHECK(gfd_field_create(40, nullptr, &g) == GFD_ERR_RANGE);
  CHECK(std::string(gfd_status_name(GFD_ERR_RESOURCE)).size() > 0);
}

TEST_CASE("C API: analyses") {
  gfd_field* f = nullptr;
  REQUIRE(gfd_field_create(13, nullptr, &f) == GFD_OK);
  gfd_poly* p = nullptr;
  REQUIRE(gfd_poly_parse(f, "1,1,0,1,0,0,0,1,0,0,0", &p) == GFD_OK);
  CHECK(gfd_poly_degree(p) == 10);

  gfd_conclusion c = GFD_CONCLUSION_INAPPLICABLE;
  char* js = nullptr;
  REQUIRE(gfd_check(p, nullptr, 0, &c, &js) == GFD_OK);
  CHECK(c == GFD_CONCLUSION_DELTA_GE_6);
  const Json rep = Json::parse(take(js));
  CHECK(rep["theorem"] == "main");
  CHECK(rep["min_n"] == 13);

  int morse = 0;
  REQUIRE(gfd_morse_check(p, &morse, &js) == GFD_OK);
  CHECK(morse == 1);
  take(js);

  char* csv = nullptr;
  REQUIRE(gfd_ddt_row(p, "1", 0, &js, &csv) == GFD_OK);
  const Json row = Json::parse(take(js));
  CHECK(row["delta_alpha"] == 6);
  CHECK(take(csv).rfind("alpha_hex,beta_hex,count", 0) == 0);

  uint64_t delta = 0;
  REQUIRE(gfd_delta_full(p, 0, 1, &delta, &js) == GFD_OK);
  CHECK(delta >= 6);
  CHECK(Json::parse(take(js)).contains("runtime_ms"));

  gfd_field* big = nullptr;
  REQUIRE(gfd_field_create(15, nullptr, &big) == GFD_OK);
  gfd_poly* cube = nullptr;
  REQUIRE(gfd_poly_parse(big, "1,0,0,0", &cube) == GFD_OK);
  CHECK(gfd_delta_full(cube, 0, 0, &delta, &js) == GFD_ERR_RESOURCE);
  CHECK(std::string(gfd_last_error()).find("--allow-large") != std::string::npos);
  gfd_poly_destroy(cube);
  gfd_field_destroy(big);

  REQUIRE(gfd_monodromy_stats(p, "1", GFD_MODE_CUBIC_S3, 256, 1, &js) == GFD_OK);
  CHECK(Json::parse(take(js))["samples"] == 256);

  int verdict = 0;
  CHECK(gfd_klein_check(p, "1", &verdict, &js) == GFD_ERR_PRECONDITION);

  REQUIRE(gfd_chebotarev_threshold(24, 6, &js) == GFD_OK);
  const Json th = Json::parse(take(js));
  CHECK(th["g_bound"] == 37);
  CHECK(th["min_n"] == 13);

  gfd_poly_destroy(p);
  gfd_field_destroy(f);
}

TEST_CASE("C API: small-field delta and Klein check") {
  gfd_field* f = nullptr;
  REQUIRE(gfd_field_create(5, nullptr, &f) == GFD_OK);
  gfd_poly* cube = nullptr;
  REQUIRE(gfd_poly_parse(f, "1,0,0,0", &cube) == GFD_OK);
  uint64_t delta = 0;
  char* js = nullptr;
  REQUIRE(gfd_delta_full(cube, 0, 0, &delta, &js) == GFD_OK);
  CHECK(delta == 2);
  CHECK_FALSE(Json::parse(take(js)).contains("runtime_ms"));
  REQUIRE(gfd_ddt_csv(cube, 0, &js) == GFD_OK);
  take(js);
  gfd_poly_destroy(cube);
  gfd_field_destroy(f);

  REQUIRE(gfd_field_create(4, "19", &f) == GFD_OK);
  gfd_poly* p = nullptr;
  REQUIRE(gfd_poly_parse(f, "1,0,0,0,0,0,0,1,0,0,0", &p) == GFD_OK);
  int verdict = 0;
  REQUIRE(gfd_klein_check(p, "a", &verdict, &js) == GFD_OK);
  CHECK(verdict == 1);
  const Json k = Json::parse(take(js));
  CHECK(k["witness"]["q_poly"] == "1,a,1");
  gfd_poly_destroy(p);
  gfd_field_destroy(f);
}
