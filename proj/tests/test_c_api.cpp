// Exercises the shared library through the C interface only.
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "affcox/affcox.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  affcox_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("groups and elements") {
  affcox_group* g = nullptr;
  REQUIRE(affcox_group_create('C', 3, nullptr, &g) == AFFCOX_OK);
  int rank = 0;
  CHECK(affcox_group_rank(g, &rank) == AFFCOX_OK);
  CHECK(rank == 3);
  char* desc = nullptr;
  REQUIRE(affcox_group_describe_json(g, &desc) == AFFCOX_OK);
  CHECK(take(desc).find("\"cartan\"") != std::string::npos);

  affcox_element *a = nullptr, *b = nullptr, *ab = nullptr, *inv = nullptr, *id = nullptr, *p = nullptr;
  REQUIRE(affcox_element_parse(g, "s0 s1", &a) == AFFCOX_OK);
  REQUIRE(affcox_element_parse(g, "s2 s3", &b) == AFFCOX_OK);
  REQUIRE(affcox_element_multiply(a, b, &ab) == AFFCOX_OK);
  int len = -1;
  CHECK(affcox_element_length(ab, &len) == AFFCOX_OK);
  CHECK(len == 4);
  REQUIRE(affcox_element_inverse(ab, &inv) == AFFCOX_OK);
  affcox_element* prod = nullptr;
  REQUIRE(affcox_element_multiply(ab, inv, &prod) == AFFCOX_OK);
  REQUIRE(affcox_element_parse(g, "e", &id) == AFFCOX_OK);
  int eq = 0;
  CHECK(affcox_element_equal(prod, id, &eq) == AFFCOX_OK);
  CHECK(eq == 1);
  REQUIRE(affcox_element_power(a, 2, &p) == AFFCOX_OK);
  char* text = nullptr;
  REQUIRE(affcox_element_to_text(id, &text) == AFFCOX_OK);
  CHECK(take(text) == "t[0,0,0] d^0");
  char* json = nullptr;
  REQUIRE(affcox_element_to_json(ab, &json) == AFFCOX_OK);
  CHECK(take(json).find("\"length\":4") != std::string::npos);

  for (auto* x : {a, b, ab, inv, id, p, prod}) affcox_element_destroy(x);
  affcox_group_destroy(g);
}

TEST_CASE("error codes") {
  affcox_group* g = nullptr;
  CHECK(affcox_group_create('Q', 3, nullptr, &g) == AFFCOX_INVALID_ARGUMENT);
  CHECK(std::string(affcox_last_error_message()).find("unknown root system type") != std::string::npos);
  CHECK(affcox_group_create('A', 3, "triality", &g) == AFFCOX_INVALID_ARGUMENT);
  CHECK(affcox_group_create('A', 3, nullptr, nullptr) == AFFCOX_NULL_ARGUMENT);
  REQUIRE(affcox_group_create('A', 3, "flip", &g) == AFFCOX_OK);
  affcox_element* x = nullptr;
  CHECK(affcox_element_parse(g, "s9", &x) == AFFCOX_PARSE_ERROR);
  CHECK(affcox_element_parse(g, "t[1,2", &x) == AFFCOX_PARSE_ERROR);
  CHECK(affcox_element_parse(nullptr, "s1", &x) == AFFCOX_NULL_ARGUMENT);

  affcox_group* h = nullptr;
  REQUIRE(affcox_group_create('B', 3, nullptr, &h) == AFFCOX_OK);
  affcox_element *gx = nullptr, *hx = nullptr, *out = nullptr;
  REQUIRE(affcox_element_parse(g, "s1", &gx) == AFFCOX_OK);
  REQUIRE(affcox_element_parse(h, "s1", &hx) == AFFCOX_OK);
  CHECK(affcox_element_multiply(gx, hx, &out) == AFFCOX_INVALID_ARGUMENT);
  int eq = 0;
  CHECK(affcox_element_equal(gx, hx, &eq) == AFFCOX_INVALID_ARGUMENT);
  affcox_element_destroy(gx);
  affcox_element_destroy(hx);
  affcox_group_destroy(g);
  affcox_group_destroy(h);
  CHECK(std::string(affcox_status_string(AFFCOX_BUDGET_EXCEEDED)) == "node budget exceeded");
  CHECK(std::string(affcox_version()) == "0.1.0");
}

TEST_CASE("command runners") {
  affcox_run_options o;
  affcox_run_options_init(&o);
  CHECK(o.delta_pow == -1);
  CHECK(o.conjugates == 10);
  CHECK(o.conj_length == 6);
  o.type = "B";
  o.rank = 3;
  o.tau = "1";
  char* report = nullptr;
  int passed = 0;
  REQUIRE(affcox_run_verify(&o, AFFCOX_FORMAT_TEXT, &report, &passed) == AFFCOX_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("result: PASS") != std::string::npos);
  REQUIRE(affcox_run_verify(&o, AFFCOX_FORMAT_JSON, &report, &passed) == AFFCOX_OK);
  CHECK(take(report).find("\"schema_version\": 1") != std::string::npos);

  REQUIRE(affcox_run_classify(&o, AFFCOX_FORMAT_TEXT, &report, &passed) == AFFCOX_OK);
  CHECK(passed == 1);
  take(report);
  REQUIRE(affcox_run_min_elements(&o, AFFCOX_FORMAT_TEXT, &report, &passed) == AFFCOX_OK);
  take(report);

  affcox_run_options t;
  affcox_run_options_init(&t);
  t.max_rank = 3;
  REQUIRE(affcox_run_tables(&t, AFFCOX_FORMAT_TEXT, &report, &passed) == AFFCOX_OK);
  CHECK(passed == 1);
  take(report);

  o.type = "E";
  o.rank = 8;
  o.tau = nullptr;
  o.node_budget = 10;
  report = nullptr;
  CHECK(affcox_run_verify(&o, AFFCOX_FORMAT_TEXT, &report, &passed) == AFFCOX_BUDGET_EXCEEDED);
  REQUIRE(report != nullptr);
  CHECK(passed == 0);
  CHECK(take(report).find("closure_complete") != std::string::npos);

  o.type = "Z";
  report = nullptr;
  CHECK(affcox_run_verify(&o, AFFCOX_FORMAT_TEXT, &report, &passed) == AFFCOX_INVALID_ARGUMENT);
  CHECK(report == nullptr);
  CHECK(affcox_run_verify(nullptr, AFFCOX_FORMAT_TEXT, &report, &passed) == AFFCOX_NULL_ARGUMENT);
}
