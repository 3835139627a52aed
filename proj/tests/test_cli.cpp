#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GRAYCAT_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string diagram(const std::string& name) {
  return std::string(GRAYCAT_ROOT) + "/diagrams/" + name;
}

} // namespace

TEST_CASE("laws exit codes") {
  auto pass = run("laws --model pivdec:cyclic:4:lambda=z^1 --suite gray,duals --seed 7 --samples 4000");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("\"pass\": true") != std::string::npos);

  auto fail = run("laws --model pivdec:cyclic:3:lambda=z^1 --suite spherical --seed 7 --samples 2000");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("failures") != std::string::npos);
  CHECK(fail.out.find("h=") != std::string::npos); // a witness is printed

  auto usage = run("laws --model pivdec:cyclic:4:lambda=z^1 --suite nosuch");
  CHECK(usage.exit_code == 2);
  auto usage2 = run("laws --model pivdec:octonion:4");
  CHECK(usage2.exit_code == 2);
}

TEST_CASE("deterministic reports") {
  std::string args = "laws --model pivdec:cyclic:3:lambda=z^1 --suite gray,natiso --seed 11 --samples 500";
  auto a = run(args);
  auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  std::string fuzz = "fuzz --diagram " + diagram("cross_pair.gcd") + " --steps 25 --seed 9";
  auto fa = run(fuzz);
  auto fb = run(fuzz);
  CHECK(fa.exit_code == 0);
  CHECK(fa.out == fb.out);
}

TEST_CASE("eval command") {
  auto cusp = run("eval --diagram " + diagram("cusp_pair.gcd"));
  CHECK(cusp.exit_code == 0);
  CHECK(cusp.out.find("\"scalar\": \"1\"") != std::string::npos);

  auto genus2 = run("eval --diagram " + diagram("genus2_z4.gcd"));
  CHECK(genus2.exit_code == 0);
  CHECK(genus2.out.find("\"scalar\": \"-1\"") != std::string::npos);

  auto missing = run("eval --diagram /nonexistent.gcd");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("invariant command") {
  auto inv = run("invariant --model pivdec:cyclic:4:lambda=z^1 --functor id:1 --genus 3");
  CHECK(inv.exit_code == 0);
  // g = 0..3 gives -1, 1, -1, 1
  CHECK(inv.out.find("\"lambda\": \"-1\"") != std::string::npos);
  CHECK(inv.out.find("\"lambda\": \"1\"") != std::string::npos);
  CHECK(inv.out.find("\"reciprocity\": \"1\"") != std::string::npos);
  CHECK(inv.out.find("\"pass\": true") != std::string::npos);

  auto bad = run("invariant --model pivdec:cyclic:4:lambda=z^1 --functor id:9");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("fuzz command") {
  auto zero = run("fuzz --diagram " + diagram("caps_basic.gcd") + " --steps 0 --seed 7");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("\"violations\": 0") != std::string::npos);

  auto bad = run("fuzz --diagram " + diagram("caps_basic.gcd") + " --moves nosuch");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("group file model") {
  std::string path = "/tmp/graycat_group_z4.json";
  {
    std::ofstream f(path);
    f << R"({"name":"Z4","order":4,
         "table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
         "lambda":["z^0","z^1","z^2","z^3"],"chi":"all"})";
  }
  auto r = run("laws --model " + path + " --suite spherical --samples 2000 --seed 7");
  CHECK(r.exit_code == 0);
  auto inv = run("invariant --model " + path + " --functor id:1 --genus 2");
  CHECK(inv.exit_code == 0);
  CHECK(inv.out.find("\"pass\": true") != std::string::npos);
}
