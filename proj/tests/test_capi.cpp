// Exercises the shared-library boundary exactly as an external client
// would: only the public C header, no internal types.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "laplace_spectra.h"

using json = nlohmann::ordered_json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  ls_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names are stable strings") {
  CHECK(std::string(ls_version()) == "0.1.0");
  CHECK(std::string(ls_status_name(LS_OK)) == "ok");
  CHECK(std::string(ls_status_name(LS_ERR_USAGE)) == "usage");
  CHECK(std::string(ls_status_name(LS_ERR_DOMAIN)) == "domain");
  CHECK(std::string(ls_status_name(LS_ERR_CAPABILITY)) == "capability");
  CHECK(std::string(ls_status_name(LS_ERR_CAPACITY)) == "capacity");
  CHECK(std::string(ls_status_name(LS_ERR_INVARIANT)) == "invariant");
  CHECK(std::string(ls_status_name(LS_ERR_UNDECIDED)) == "undecided");
  CHECK(std::string(ls_status_name(LS_ERR_NOMEM)) == "nomem");
  CHECK(std::string(ls_status_name(LS_ERR_INTERNAL)) == "internal");
}

TEST_CASE("run_json executes a command and hands over the report") {
  char* out = nullptr;
  ls_status st = ls_run_json(R"({"command":"roots","system":"A2"})", &out);
  REQUIRE(st == LS_OK);
  json r = json::parse(take(out));
  CHECK(r.at("payload").at("weyl_order") == 6);
  CHECK(r.at("payload").at("delta_norm2") == "2");

  // Identical calls produce identical bytes through the C boundary too.
  char* again = nullptr;
  REQUIRE(ls_run_json(R"({"command":"roots","system":"A2"})", &again) == LS_OK);
  CHECK(take(again) == r.dump(2) + "\n");
}

TEST_CASE("run_json maps error classes onto status codes") {
  char* out = nullptr;

  CHECK(ls_run_json("definitely not json", &out) == LS_ERR_USAGE);
  CHECK(out == nullptr);
  CHECK(std::strlen(ls_last_error()) > 0);

  CHECK(ls_run_json(nullptr, &out) == LS_ERR_USAGE);
  CHECK(ls_run_json(R"({"command":"roots","system":"A2"})", nullptr) ==
        LS_ERR_USAGE);

  CHECK(ls_run_json(R"({"command":"roots","system":"E8"})", &out) ==
        LS_ERR_CAPABILITY);
  CHECK(out == nullptr);
  CHECK(ls_run_json(R"({"command":"sphere-sym","system":"A1","a2":0})", &out) ==
        LS_ERR_DOMAIN);
  CHECK(ls_run_json(R"({"command":"certify","mmax":13})", &out) ==
        LS_ERR_CAPACITY);
}

TEST_CASE("undecided certification still returns its report") {
  char* out = nullptr;
  ls_status st = ls_run_json(
      R"({"command":"certify","mmax":2,)"
      R"("schedule":[[["1","0","0"],["0","1","0"],["0","0","1"]]]})",
      &out);
  CHECK(st == LS_ERR_UNDECIDED);
  REQUIRE(out != nullptr);
  json r = json::parse(take(out));
  CHECK(r.at("payload").at("complete") == false);
  CHECK(std::strlen(ls_last_error()) > 0);
}

TEST_CASE("root system handles expose scalar answers") {
  ls_root_system* rs = nullptr;
  REQUIRE(ls_root_system_create("A2", nullptr, 1, &rs) == LS_OK);
  REQUIRE(rs != nullptr);

  int rank = 0;
  CHECK(ls_root_system_rank(rs, &rank) == LS_OK);
  CHECK(rank == 2);

  int positives = 0;
  CHECK(ls_root_system_positive_count(rs, &positives) == LS_OK);
  CHECK(positives == 3);

  long weyl = 0;
  CHECK(ls_root_system_weyl_order(rs, &weyl) == LS_OK);
  CHECK(weyl == 6);

  char* norm = nullptr;
  CHECK(ls_root_system_delta_norm2(rs, &norm) == LS_OK);
  CHECK(take(norm) == "2");

  char* a2 = nullptr;
  char* lambda = nullptr;
  CHECK(ls_root_system_casimir(rs, R"(["1","1"])", &a2, &lambda) == LS_OK);
  CHECK(take(a2) == "8");
  CHECK(take(lambda) == "6");

  // Either out-parameter may be dropped.
  CHECK(ls_root_system_casimir(rs, "[0, 0]", nullptr, &lambda) == LS_OK);
  CHECK(take(lambda) == "0");

  char* desc = nullptr;
  CHECK(ls_root_system_describe_json(rs, &desc) == LS_OK);
  json d = json::parse(take(desc));
  CHECK(d.at("payload").at("label") == "A2");
  CHECK(d.at("payload").at("positive_root_count") == 3);

  ls_root_system_free(rs);
}

TEST_CASE("handles validate their inputs") {
  ls_root_system* rs = nullptr;
  // A letter-digit token naming an unknown family is a capability gap.
  CHECK(ls_root_system_create("Z9", nullptr, 1, &rs) == LS_ERR_CAPABILITY);
  CHECK(rs == nullptr);
  CHECK(ls_root_system_create("A7", nullptr, 1, &rs) == LS_ERR_CAPABILITY);
  CHECK(ls_root_system_create(nullptr, nullptr, 1, &rs) == LS_ERR_USAGE);
  CHECK(ls_root_system_create("A2", "not json", 1, &rs) == LS_ERR_USAGE);
  CHECK(ls_root_system_create("A2", R"({"blue":2})", 1, &rs) == LS_ERR_USAGE);

  REQUIRE(ls_root_system_create("BC1", R"({"short":2,"long":1})", 1, &rs) ==
          LS_OK);
  char* norm = nullptr;
  CHECK(ls_root_system_delta_norm2(rs, &norm) == LS_OK);
  CHECK(take(norm) == "4");

  char* a2 = nullptr;
  CHECK(ls_root_system_casimir(rs, R"(["1","0"])", &a2, nullptr) ==
        LS_ERR_USAGE);  // wrong coordinate count for rank 1
  CHECK(ls_root_system_casimir(rs, "[0.5]", &a2, nullptr) == LS_ERR_USAGE);
  ls_root_system_free(rs);

  // Null handle or null outs never crash, they report usage.
  int n = 0;
  CHECK(ls_root_system_rank(nullptr, &n) == LS_ERR_USAGE);
  CHECK(ls_root_system_delta_norm2(nullptr, &norm) == LS_ERR_USAGE);
  ls_root_system_free(nullptr);
  ls_string_free(nullptr);
}

TEST_CASE("plain-mode handles use the unweighted half sum") {
  ls_root_system* rs = nullptr;
  REQUIRE(ls_root_system_create("BC1", R"({"short":2,"long":1})", 0, &rs) ==
          LS_OK);
  char* norm = nullptr;
  CHECK(ls_root_system_delta_norm2(rs, &norm) == LS_OK);
  CHECK(take(norm) == "9/4");  // delta = 3 w1, (w1,w1) = 1/4
  ls_root_system_free(rs);
}
