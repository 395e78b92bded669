#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "cuspcoh.h"

namespace {

constexpr const char* kImquadField = R"({
  "embeddings": ["eta", "eta_bar"],
  "conjugation": {"eta": "eta_bar", "eta_bar": "eta"},
  "galois_generators": []
})";

constexpr const char* kSexticField = R"({
  "embeddings": ["e", "a", "a2", "b", "ab", "a2b"],
  "conjugation": {"e": "b", "a": "a2b", "a2": "ab", "b": "e", "ab": "a2", "a2b": "a"},
  "galois_generators": [
    {"e": "a", "a": "a2", "a2": "e", "b": "ab", "ab": "a2b", "a2b": "b"}
  ]
})";

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out = text;
  cusp_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("version string") {
  REQUIRE(cusp_version() != nullptr);
  CHECK(std::strlen(cusp_version()) > 0);
}

TEST_CASE("field handles") {
  cusp_field* field = nullptr;
  REQUIRE(cusp_field_parse(kImquadField, &field) == CUSP_OK);
  CHECK(cusp_field_degree(field) == 2);
  CHECK(cusp_field_totally_imaginary(field) == 1);
  CHECK(cusp_field_totally_real(field) == 0);

  int64_t order = 0;
  REQUIRE(cusp_field_group_order(field, 0, &order) == CUSP_OK);
  CHECK(order == 2);
  cusp_field_free(field);

  cusp_field* sextic = nullptr;
  REQUIRE(cusp_field_parse(kSexticField, &sextic) == CUSP_OK);
  REQUIRE(cusp_field_group_order(sextic, 0, &order) == CUSP_OK);
  CHECK(order == 6);

  char* partition = nullptr;
  REQUIRE(cusp_field_f1_partition(sextic, 0, &partition) == CUSP_OK);
  auto parsed = nlohmann::json::parse(take(partition));
  REQUIRE(parsed["blocks"].size() == 2);
  CHECK(parsed["blocks"][0].size() == 3);

  CHECK(cusp_field_group_order(sextic, 3, &order) == CUSP_E_RESOURCE);
  CHECK(std::strlen(cusp_last_error()) > 0);
  cusp_field_free(sextic);
}

TEST_CASE("invalid field json") {
  cusp_field* field = nullptr;
  CHECK(cusp_field_parse("{broken", &field) == CUSP_E_INVALID);
  CHECK(cusp_field_parse(R"({"embeddings": ["a"], "conjugation": {"a": "b"}})", &field) ==
        CUSP_E_INVALID);
  CHECK(std::strlen(cusp_last_error()) > 0);
}

TEST_CASE("weight purity through the C surface") {
  cusp_field* field = nullptr;
  REQUIRE(cusp_field_parse(kImquadField, &field) == CUSP_OK);

  cusp_weight* weight = nullptr;
  REQUIRE(cusp_weight_parse(
              R"({"n": 2, "per_embedding": {"eta": [5, 0], "eta_bar": [5, 0]}})", &weight) ==
          CUSP_OK);

  int is_pure = 0;
  int64_t w = -1;
  REQUIRE(cusp_weight_purity(field, weight, &is_pure, &w) == CUSP_OK);
  CHECK(is_pure == 1);
  CHECK(w == 5);
  REQUIRE(cusp_weight_strong_purity(field, weight, 0, &is_pure, &w) == CUSP_OK);
  CHECK(is_pure == 1);
  CHECK(w == 5);

  char* change = nullptr;
  REQUIRE(cusp_weight_base_change(field, weight, 0, &change) == CUSP_OK);
  auto parsed = nlohmann::json::parse(take(change));
  CHECK(parsed["w"] == 5);
  CHECK(parsed["blocks"].size() == 2);
  CHECK(parsed["kappa"][0] == nlohmann::json::array({5, 0}));

  cusp_weight_free(weight);

  cusp_weight* impure = nullptr;
  REQUIRE(cusp_weight_parse(
              R"({"n": 2, "per_embedding": {"eta": [1, 0], "eta_bar": [0, 0]}})", &impure) ==
          CUSP_OK);
  REQUIRE(cusp_weight_purity(field, impure, &is_pure, &w) == CUSP_OK);
  CHECK(is_pure == 0);
  char* out = nullptr;
  CHECK(cusp_weight_base_change(field, impure, 0, &out) == CUSP_E_STAGE);
  cusp_weight_free(impure);
  cusp_field_free(field);
}

TEST_CASE("scenario check") {
  std::string scenario = std::string(R"({"field": )") + kImquadField +
                         R"(, "weight": {"n": 2, "per_embedding": {"eta": [1, 0], "eta_bar": [1, 0]}}})";
  char* report = nullptr;
  REQUIRE(cusp_check(scenario.c_str(), 0, 0, &report) == CUSP_OK);
  auto parsed = nlohmann::json::parse(take(report));
  CHECK(parsed["result"] == "pass");
  CHECK(parsed["version"].get<std::string>().find("cuspcoh") == 0);

  std::string failing = std::string(R"({"field": )") + kImquadField +
                        R"(, "weight": {"n": 2, "per_embedding": {"eta": [2, 0], "eta_bar": [1, 1]}}})";
  report = nullptr;
  REQUIRE(cusp_check(failing.c_str(), 0, 0, &report) == CUSP_E_STAGE);
  auto failed = nlohmann::json::parse(take(report));
  CHECK(failed["result"] == "fail");
  CHECK(failed["failed_stage"] == "purity");

  char* none = nullptr;
  CHECK(cusp_check("{bad json", 0, 0, &none) == CUSP_E_INVALID);
}

TEST_CASE("dump kinds") {
  char* out = nullptr;
  REQUIRE(cusp_dump("wedge-p", 2, 1, -1, &out) == CUSP_OK);
  auto wedge = nlohmann::json::parse(take(out));
  REQUIRE(wedge.is_array());
  CHECK(wedge.size() == 3);

  REQUIRE(cusp_dump("wedge-u", 2, -1, 0, &out) == CUSP_OK);
  auto wu = nlohmann::json::parse(take(out));
  CHECK(wu == nlohmann::json::parse(R"([{"m": [0], "mult": 1}])"));

  REQUIRE(cusp_dump("dims", 3, -1, -1, &out) == CUSP_OK);
  auto dims = nlohmann::json::parse(take(out));
  CHECK(dims["3"] == 1);
  CHECK(dims["4"] == 2);
  CHECK(dims["5"] == 1);

  REQUIRE(cusp_dump("lefschetz", 2, -1, -1, &out) == CUSP_OK);
  auto lefschetz = nlohmann::json::parse(take(out));
  CHECK(lefschetz["total"]["coeff"] == 2);
  CHECK(lefschetz["total"]["c_power"] == 1);

  REQUIRE(cusp_dump("chi-m", 2, -1, -1, &out) == CUSP_OK);
  auto chi = nlohmann::json::parse(take(out));
  CHECK(chi == nlohmann::json::parse(R"([{"m": [2], "mult": 1}])"));

  REQUIRE(cusp_dump("chi-m", 3, -1, -1, &out) == CUSP_OK);
  auto chi3 = nlohmann::json::parse(take(out));
  CHECK(chi3 == nlohmann::json::parse(R"([{"m": [4, 2], "mult": 1}])"));

  CHECK(cusp_dump("nope", 2, 1, 1, &out) == CUSP_E_INVALID);
  CHECK(cusp_dump("wedge-p", 2, 99, -1, &out) == CUSP_E_INVALID);
  CHECK(cusp_dump("wedge-p", 0, 1, -1, &out) == CUSP_E_INVALID);
}

TEST_CASE("selftest at rank one") {
  char* summary = nullptr;
  REQUIRE(cusp_selftest(1, 0, 0, &summary) == CUSP_OK);
  auto parsed = nlohmann::json::parse(take(summary));
  CHECK(parsed["result"] == "pass");
  CHECK(parsed["failures"] == 0);

  char* none = nullptr;
  CHECK(cusp_selftest(0, 0, 0, &none) == CUSP_E_INVALID);
}
