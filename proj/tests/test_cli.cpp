#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("crystal listings have the Weyl dimension") {
  for (auto [lam, rows] : {std::pair<const char*, size_t>{"1,0", 4},
                           {"0,0", 1},
                           {"0,1", 5}}) {
    RunResult r = run_cli(std::string("crystal --lambda ") + lam + " --format json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rows"].size() == rows);
    CHECK(doc["schema"] == "c2charge/1");
  }
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("crystal --lambda 1,-1").code == 1);
  CHECK(run_cli("crystal --lambda bogus").code == 1);
  CHECK(run_cli("crystal").code == 1);
  CHECK(run_cli("crystal --lambda 1,0 --format yaml").code == 1);
}

TEST_CASE("decompose census") {
  RunResult r = run_cli("decompose --lambda 0,2 --format json");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["census"].size() == 2);
  CHECK(doc["census"][0]["size"].get<long long>() +
            doc["census"][1]["size"].get<long long>() ==
        14);
}

TEST_CASE("kostka table matches and exits zero") {
  RunResult r = run_cli("kostka --lambda 0,2 --mu 0,0 --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1*q^2 + 1*q^4") != std::string::npos);
  CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("graph export") {
  RunResult r = run_cli("graph --lambda 0,0");
  REQUIRE(r.code == 0);
  CHECK(r.out == "digraph bruhat {\n  \"(0,0)\";\n}\n");
  RunResult twisted = run_cli("graph --lambda 3,1 --m 4");
  REQUIRE(twisted.code == 0);
  CHECK(twisted.out.find("[S]") != std::string::npos);
  CHECK(twisted.out.find("[N]") != std::string::npos);
}

TEST_CASE("outputs are byte-deterministic") {
  RunResult a = run_cli("crystal --lambda 2,1 --format csv");
  RunResult b = run_cli("crystal --lambda 2,1 --format csv");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify at bound zero passes quickly") {
  RunResult r = run_cli("verify --bound 0 --format json");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_passed"] == true);
  CHECK(doc["rows"].size() == 10);
}
