#include "support.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace lamod;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LAMOD_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe)) result.out += buffer.data();
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string spec_file(const std::string& name) { return std::string(LAMOD_SPEC_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("validate") {
  const Run r = run("validate " + spec_file("sl2"));
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["valid"] == true);
  CHECK(run("validate /no/such/spec.json").code == 2);
}

TEST_CASE("modular") {
  const Run r = run("modular " + spec_file("nonabelian2"));
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "lamod-report/1");
  CHECK(j["theta"]["text"] == "e1*");
  CHECK(run("modular nonabelian2 --format text").out.find("theta = e1*") != std::string::npos);
}

TEST_CASE("cohomology") {
  const Run r = run("cohomology " + spec_file("tangent_t2") + " --max-frequency 2 --degree all");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  std::vector<int> dims;
  for (const auto& row : j["cohomology"]) {
    dims.push_back(row["dim"].get<int>());
    CHECK(row["stabilized"] == true);
  }
  CHECK(dims == std::vector<int>{1, 2, 1});
  CHECK(run("cohomology sl2 --degree 7").code == 2);
  CHECK(run("cohomology cotangent_sextic --max-poly-degree 2 --degree 1").code == 1);
}

TEST_CASE("operands and errors") {
  const Run d = run("d nonabelian2 '[{\"indices\": [2]}]' --format text");
  CHECK(d.code == 0);
  CHECK(d.out == "(-1) e1*^e2*\n");
  const Run s = run("schouten cotangent_linear '[{\"indices\": [1]}]' '[{\"indices\": [2], \"coeff\": \"y\"}]' --format text");
  CHECK(s.out == "(y) e1 + (x) e2\n");
  const Run bad = run("d sl2 '[{\"indices\": [1], \"coeff\": \"q\"}]'");
  CHECK(bad.code == 2);
  CHECK(Json::parse(bad.out)["error"]["message"].get<std::string>().find("q") != std::string::npos);
  CHECK(run("pairing cotangent_linear").code == 1);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("checks") {
  CHECK(run("poisson-modular cotangent_linear").code == 0);
  CHECK(run("sqrt-check transformation_plane").code == 0);
  CHECK(run("stokes cotangent_torus --trials 3").code == 0);
  CHECK(run("homology-check cotangent_space --trials 3").code == 0);
  CHECK(run("homotopy-check transformation_plane --trials 3").code == 0);
  CHECK(run("probe transformation_v0_n2 --max-frequency 6").code == 0);
  CHECK(run("identity-suite --trials 1 --spec nonabelian2").code == 0);
}

TEST_CASE("output is deterministic") {
  CHECK(run("identity-suite --trials 2 --spec tangent_t1").out == run("identity-suite --trials 2 --spec tangent_t1").out);
  CHECK(run("pairing tangent_t2 --max-frequency 1").out == run("pairing tangent_t2 --max-frequency 1").out);
}
