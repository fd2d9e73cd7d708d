// The C API through the shared library only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "plethysm/plethysm_c.h"

TEST_CASE("zoo fixture through the C API") {
  plethysm_options o;
  plethysm_options_default(&o);
  plethysm_fixture* f = nullptr;
  REQUIRE(plethysm_fixture_zoo("surjection", &o, &f) == PLETHYSM_OK);
  size_t objs = 0, mors = 0, v = 0;
  CHECK(plethysm_fixture_shape(f, &objs, &mors) == PLETHYSM_OK);
  CHECK(objs == 3);
  // surjections 2 ->> 1 and 2 ->> 2
  CHECK(plethysm_fixture_value_size(f, 2, 1, &v) == PLETHYSM_OK);
  CHECK(v == 1);
  CHECK(plethysm_fixture_value_size(f, 2, 2, &v) == PLETHYSM_OK);
  CHECK(v == 2);
  CHECK(plethysm_fixture_value_size(f, 5, 0, &v) == PLETHYSM_INVALID_ARGUMENT);
  CHECK(std::string(plethysm_last_error()).find("out of range") != std::string::npos);

  int lawful = 0;
  CHECK(plethysm_fixture_check(f, "monoid", &o, &lawful) == PLETHYSM_OK);
  CHECK(lawful == 1);

  char* text = nullptr;
  REQUIRE(plethysm_fixture_emit(f, &text) == PLETHYSM_OK);
  plethysm_fixture* g = nullptr;
  CHECK(plethysm_fixture_parse(text, &g) == PLETHYSM_OK);
  plethysm_string_free(text);
  plethysm_fixture_free(g);
  plethysm_fixture_free(f);
}

TEST_CASE("errors come back as codes") {
  plethysm_fixture* f = nullptr;
  CHECK(plethysm_fixture_parse("OBJECTS\n0\nMORPHISMS\nf 0 1\n", &f) == PLETHYSM_PARSE);
  CHECK(f == nullptr);
  CHECK(std::string(plethysm_last_error()).find("line 4") != std::string::npos);
  CHECK(plethysm_fixture_zoo(nullptr, nullptr, &f) == PLETHYSM_INVALID_ARGUMENT);
}

TEST_CASE("run a command") {
  char const* args[] = {"tau-naturals"};
  char*       report = nullptr;
  int         status = -1;
  REQUIRE(plethysm_run("extend", args, 1, nullptr, nullptr, &report, &status) == PLETHYSM_OK);
  CHECK(status == 0);
  CHECK(std::string(report).find("(1, 1) 3") != std::string::npos);
  plethysm_string_free(report);
  CHECK(plethysm_run("frobnicate", nullptr, 0, nullptr, nullptr, &report, &status)
        == PLETHYSM_INVALID_ARGUMENT);
}
