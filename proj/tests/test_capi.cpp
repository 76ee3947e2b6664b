#include "c2charge.h"

#include <doctest.h>

#include <json.hpp>

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  c2c_free_string(s);
  return out;
}

}  // namespace

TEST_CASE("crystal handles") {
  c2c_crystal* cr = nullptr;
  REQUIRE(c2c_crystal_create(1, 0, &cr) == C2C_OK);
  CHECK(c2c_crystal_size(cr) == 4);
  long long str2[4], wt[2];
  REQUIRE(c2c_crystal_element(cr, 0, str2, wt) == C2C_OK);
  CHECK(str2[0] == 0);
  CHECK(wt[0] == 1);  // lexicographically first element is the highest one
  CHECK(c2c_crystal_element(cr, 99, str2, wt) == C2C_ERANGE);
  long long eps[3], phi[3];
  REQUIRE(c2c_element_stats(cr, 0, eps, phi) == C2C_OK);
  CHECK(eps[0] == 0);
  CHECK(phi[0] == 1);
  long long pat = -1, at = -1, zeta[2];
  REQUIRE(c2c_element_decomp(cr, 0, &pat, &at, zeta) == C2C_OK);
  CHECK(pat == 0);
  CHECK(at == 0);
  CHECK(zeta[0] == 1);
  long long charge = -1;
  REQUIRE(c2c_element_charge(cr, 0, &charge) == C2C_OK);
  CHECK(charge == 0);
  c2c_crystal_free(cr);
}

TEST_CASE("charge is rejected off the dominant cone") {
  c2c_crystal* cr = nullptr;
  REQUIRE(c2c_crystal_create(1, 0, &cr) == C2C_OK);
  int rejected = 0;
  for (long long i = 0; i < c2c_crystal_size(cr); ++i) {
    long long str2[4], wt[2];
    REQUIRE(c2c_crystal_element(cr, i, str2, wt) == C2C_OK);
    long long charge;
    c2c_status s = c2c_element_charge(cr, i, &charge);
    if (wt[0] >= 0 && wt[1] >= 0) {
      CHECK(s == C2C_OK);
    } else {
      CHECK(s == C2C_EDOMAIN);
      ++rejected;
    }
  }
  CHECK(rejected > 0);
  c2c_crystal_free(cr);
}

TEST_CASE("error codes") {
  c2c_crystal* cr = nullptr;
  CHECK(c2c_crystal_create(-1, 0, &cr) == C2C_EINVAL);
  char* out = nullptr;
  CHECK(c2c_render_crystal(1, 0, "yaml", &out) == C2C_EFORMAT);
  CHECK(c2c_render_crystal(-1, 0, "json", &out) == C2C_EINVAL);
  CHECK(std::string(c2c_status_name(C2C_OK)) == "ok");
}

TEST_CASE("kostka strings") {
  char* p = nullptr;
  REQUIRE(c2c_kostka_oracle(0, 2, 0, 0, &p) == C2C_OK);
  CHECK(take(p) == "1*q^2 + 1*q^4");
  p = nullptr;
  REQUIRE(c2c_kostka_charge(0, 2, 0, 0, &p) == C2C_OK);
  CHECK(take(p) == "1*q^2 + 1*q^4");
}

TEST_CASE("weyl dimension") {
  CHECK(c2c_weyl_dim(1, 0) == 4);
  CHECK(c2c_weyl_dim(0, 1) == 5);
  CHECK(c2c_weyl_dim(-2, 0) == 0);
}

TEST_CASE("rendered crystal parses as json") {
  char* out = nullptr;
  REQUIRE(c2c_render_crystal(0, 1, "json", &out) == C2C_OK);
  auto doc = nlohmann::json::parse(take(out));
  CHECK(doc["schema"] == "c2charge/1");
  CHECK(doc["rows"].size() == 5);
}

TEST_CASE("rendered graph is dot text") {
  char* out = nullptr;
  REQUIRE(c2c_render_graph(0, 0, -1, &out) == C2C_OK);
  CHECK(take(out) == "digraph bruhat {\n  \"(0,0)\";\n}\n");
}

TEST_CASE("kostka render reports matches") {
  char* out = nullptr;
  int all_match = 0;
  REQUIRE(c2c_render_kostka(1, 1, "csv", 0, 0, 0, &out, &all_match) == C2C_OK);
  std::string text = take(out);
  CHECK(all_match == 1);
  CHECK(text.rfind("mu1,mu2,charge,oracle,match\n", 0) == 0);
}

TEST_CASE("verify render at bound zero") {
  char* out = nullptr;
  int all_passed = 0;
  REQUIRE(c2c_render_verify(0, 1, "text", &out, &all_passed) == C2C_OK);
  std::string text = take(out);
  CHECK(all_passed == 1);
  CHECK(text.find("FAIL") == std::string::npos);
}
