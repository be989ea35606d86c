#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "potent.h"

using json = nlohmann::json;

namespace {

struct Seq {
  potent_sequence* ptr = nullptr;
  explicit Seq(const char* text) { REQUIRE(potent_sequence_parse(text, &ptr) == POTENT_OK); }
  Seq() = default;
  ~Seq() { potent_sequence_free(ptr); }
};

std::string take(char* s) {
  std::string out(s);
  potent_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API: sequence lifecycle") {
  Seq pi("6,6,4^3,3^2");
  CHECK(potent_sequence_length(pi.ptr) == 7);
  CHECK(potent_sequence_term(pi.ptr, 1) == 6);
  CHECK(potent_sequence_term(pi.ptr, 7) == 3);
  CHECK(potent_sequence_term(pi.ptr, 8) == -1);

  char* text = nullptr;
  REQUIRE(potent_sequence_format(pi.ptr, &text) == POTENT_OK);
  CHECK(take(text) == "6^2 4^3 3^2");

  long long sigma = 0;
  int m = 0, h = 0, n = 0;
  REQUIRE(potent_sequence_stats(pi.ptr, &sigma, &m, &h, &n) == POTENT_OK);
  CHECK(sigma == 26);
  CHECK(m == 6);
  CHECK(h == 3);
  CHECK(n == 7);

  const int terms[] = {2, 3, 3};
  potent_sequence* built = nullptr;
  REQUIRE(potent_sequence_from_terms(terms, 3, &built) == POTENT_OK);
  CHECK(potent_sequence_term(built, 1) == 3);
  potent_sequence_free(built);
}

TEST_CASE("C API: parse errors set status and message") {
  potent_sequence* out = nullptr;
  CHECK(potent_sequence_parse("3^^2", &out) == POTENT_ERROR_PARSE);
  CHECK(std::strlen(potent_last_error()) > 0);
  CHECK(potent_sequence_parse(nullptr, &out) == POTENT_ERROR_INVALID);
}

TEST_CASE("C API: graphicality and lay-off") {
  Seq cubic("3^6");
  int graphic = -1;
  REQUIRE(potent_is_graphic(cubic.ptr, POTENT_GRAPHIC_ERDOS_GALLAI, &graphic) == POTENT_OK);
  CHECK(graphic == 1);
  REQUIRE(potent_is_graphic(cubic.ptr, POTENT_GRAPHIC_KLEITMAN_WANG, &graphic) == POTENT_OK);
  CHECK(graphic == 1);

  potent_sequence* residual = nullptr;
  REQUIRE(potent_sequence_lay_off(cubic.ptr, 6, &residual) == POTENT_OK);
  char* text = nullptr;
  REQUIRE(potent_sequence_format(residual, &text) == POTENT_OK);
  CHECK(take(text) == "3^2 2^3");
  potent_sequence_free(residual);

  Seq bad("1 0");
  CHECK(potent_sequence_lay_off(bad.ptr, 1, &residual) == POTENT_ERROR_LAYOFF);
  CHECK(potent_sequence_lay_off(cubic.ptr, 9, &residual) == POTENT_ERROR_INVALID);

  Seq tiny("2 2 1 1");
  int applies = 0;
  REQUIRE(potent_theorem22_applies(tiny.ptr, &applies) == POTENT_OK);
  CHECK(applies == 1);
}

TEST_CASE("C API: predicate verdict JSON") {
  Seq pi("4^6");
  char* out = nullptr;
  REQUIRE(potent_potential_check(pi.ptr, POTENT_TARGET_K33, &out) == POTENT_OK);
  json verdict = json::parse(take(out));
  CHECK(verdict["potential"] == false);
  CHECK(verdict["violated"][0]["theorem"] == "T3.1");
  CHECK(verdict["violated"][0]["condition"] == 9);
  CHECK(verdict["violated"][0]["bindings"]["entry"] == 2);

  REQUIRE(potent_potential_check(pi.ptr, POTENT_TARGET_K6C6, &out) == POTENT_OK);
  CHECK(json::parse(take(out))["potential"] == true);

  Seq small("3 3 2 2 2");
  CHECK(potent_potential_check(small.ptr, POTENT_TARGET_K33, &out) == POTENT_ERROR_DOMAIN);
}

TEST_CASE("C API: oracle search") {
  Seq pi("4^6");
  char* out = nullptr;
  REQUIRE(potent_oracle_search(pi.ptr, POTENT_TARGET_K33, POTENT_ORACLE_EXHAUSTIVE, 10, &out) == POTENT_OK);
  json absent = json::parse(take(out));
  CHECK(absent["potential"] == false);
  CHECK(absent["exhausted"] == true);
  CHECK(absent["states_explored"].get<long long>() > 0);

  REQUIRE(potent_oracle_search(pi.ptr, POTENT_TARGET_K6C6, POTENT_ORACLE_TOP_DEGREE, 10, &out) == POTENT_OK);
  json present = json::parse(take(out));
  CHECK(present["potential"] == true);
  CHECK(present["mode"] == "top-degree");
  CHECK(present["graph"]["n"] == 6);
  CHECK(present["embedding"].size() == 6);

  Seq big("2^12");
  CHECK(potent_oracle_search(big.ptr, POTENT_TARGET_K33, POTENT_ORACLE_EXHAUSTIVE, 10, &out) ==
        POTENT_ERROR_CAP);
}

TEST_CASE("C API: sigma, extremal, closed form") {
  char* out = nullptr;
  REQUIRE(potent_sigma_value(POTENT_TARGET_K6C6, 6, POTENT_SIGMA_PREDICATE, 10, &out) == POTENT_OK);
  json sigma = json::parse(take(out));
  CHECK(sigma["sigma"] == 26);
  CHECK(sigma["extremal"] == "5^3 3^3");
  CHECK(sigma["method"] == "predicate");

  long long formula = 0;
  REQUIRE(potent_sigma_closed_form(POTENT_TARGET_K6C6, 6, &formula) == POTENT_OK);
  CHECK(formula == 26);
  CHECK(potent_sigma_closed_form(POTENT_TARGET_K33, 9, &formula) == POTENT_ERROR_DOMAIN);

  potent_sequence* extremal = nullptr;
  REQUIRE(potent_extremal_sequence(POTENT_TARGET_K33, 11, &extremal) == POTENT_OK);
  char* text = nullptr;
  REQUIRE(potent_sequence_format(extremal, &text) == POTENT_OK);
  CHECK(take(text) == "10^2 4^3 3^6");
  potent_sequence_free(extremal);
  CHECK(potent_extremal_sequence(POTENT_TARGET_K33, 10, &extremal) == POTENT_ERROR_DOMAIN);
}

TEST_CASE("C API: verification report") {
  char* out = nullptr;
  REQUIRE(potent_verify_range(POTENT_TARGET_K23, 5, 6, 2, 10, &out) == POTENT_OK);
  json report = json::parse(take(out));
  CHECK(report["target"] == "k23");
  CHECK(report["mismatches"].empty());
  CHECK(report["agreements"] == report["sequences_tested"]);
}

TEST_CASE("C API: graphic sequence enumeration") {
  potent_enum* stream = nullptr;
  REQUIRE(potent_enum_graphic_create(3, 1, &stream) == POTENT_OK);
  std::vector<std::string> seen;
  for (;;) {
    potent_sequence* raw = nullptr;
    const int rc = potent_enum_graphic_next(stream, &raw);
    REQUIRE(rc >= 0);
    if (rc == 0) break;
    char* text = nullptr;
    REQUIRE(potent_sequence_format(raw, &text) == POTENT_OK);
    seen.push_back(take(text));
    potent_sequence_free(raw);
  }
  potent_enum_free(stream);
  CHECK(seen == std::vector<std::string>{"2^3", "2 1^2"});

  CHECK(potent_enum_graphic_create(0, 1, &stream) == POTENT_ERROR_INVALID);
}
