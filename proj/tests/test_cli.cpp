// Runs the mockq binary and checks output and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MOCKQ_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(MOCKQ_DATA) + "/" + name; }

}  // namespace

TEST_CASE("expand") {
  const auto r = run("--trunc 10 expand " + data("line_st.json") + " " + data("order3a_spec.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "1 + q - q^3 + q^4 + q^5 - q^6 - q^7 + 2*q^9\n");
  const auto zero = run("--trunc 0 expand " + data("line_st.json") + " " + data("order3a_spec.json"));
  CHECK(zero.code == 0);
  CHECK(zero.out == "1\n");
  const auto z = run("--trunc 12 expand " + data("plane_st.json") + " " + data("order3b_spec.json"));
  CHECK(z.code == 0);
  CHECK(z.out == "1 + q + q^2 + q^6 + q^7 - q^10 + q^12\n");
}

TEST_CASE("expand emits JSON that round-trips") {
  const auto r = run("--format json --trunc 8 expand " + data("line_st.json") + " " + data("order3a_spec.json"));
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["trunc"] == 8);
  CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("input errors exit 2") {
  CHECK(run("expand " + data("malformed.json") + " " + data("order3a_spec.json")).code == 2);
  CHECK(run("expand " + data("missing_level.json") + " " + data("order3a_spec.json")).code == 2);
  CHECK(run("expand " + data("no_such_file.json") + " " + data("order3a_spec.json")).code == 2);
  CHECK(run("verify nonexistent").code == 2);
  CHECK(run("mock rhs.nonexistent").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--format xml catalog").code == 2);
  CHECK(run("--trunc -1 catalog").code == 2);
}

TEST_CASE("mathematical failures exit 3") {
  CHECK(run("expand " + data("line_st.json") + " " + data("pole_spec.json")).code == 3);
}

TEST_CASE("verify") {
  const auto one = run("verify prop1.order5.a");
  CHECK(one.code == 0);
  CHECK(one.out.rfind("PASS prop1.order5.a trunc=30", 0) == 0);
  const auto all = run("--format json verify all");
  CHECK(all.code == 0);
  const auto j = nlohmann::json::parse(all.out);
  CHECK(j.size() == 14 + 15);
  for (const auto& r : j) CHECK(r["status"] == "pass");
}

TEST_CASE("catalog and mock") {
  const auto c = run("--format json catalog");
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out).size() == 15);
  const auto m = run("--trunc 3 mock rhs.prop2.order3.a");
  CHECK(m.code == 0);
  CHECK(m.out == "1 + q - 2*q^2 + 3*q^3\n");
}

TEST_CASE("selfcheck is clean and deterministic") {
  const auto a = run("--seed 5 --format json selfcheck");
  const auto b = run("--seed 5 --format json selfcheck");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  std::vector<std::string> names;
  for (const auto& s : j["suites"]) names.push_back(s["suite"]);
  auto has = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  CHECK(has("QSeries ring axioms"));
  CHECK(has("Pochhammer recursion"));
  CHECK(has("det_modify level oracle"));
  CHECK(run("selfcheck").code == 0);
}
