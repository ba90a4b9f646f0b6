#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#ifndef ASMVAR_CLI_PATH
#error "ASMVAR_CLI_PATH must point at the built command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Run the CLI with stderr dropped (canonical output goes to stdout only).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string("\"") + ASMVAR_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate prints one object per element plus a count") {
  const RunResult r = run_cli("enumerate asm 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count 7\n") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);
  const RunResult anti = run_cli("enumerate antichain 3");
  CHECK(anti.exit_code == 0);
  CHECK(anti.out.find("count 8\n") != std::string::npos);
}

TEST_CASE("query answers in text and json") {
  const RunResult ess = run_cli("query essential \"0,1,0;1,-1,1;0,1,0\"");
  CHECK(ess.exit_code == 0);
  CHECK(ess.out == "(1,1) (2,2)\n");
  const RunResult essj = run_cli("query essential \"0,1,0;1,-1,1;0,1,0\" --format json");
  CHECK(essj.exit_code == 0);
  CHECK(essj.out == "[[1,1],[2,2]]\n");
  const RunResult perms = run_cli("query perm-set \"0,1,0;1,-1,1;0,1,0\"");
  CHECK(perms.exit_code == 0);
  CHECK(perms.out == "{231,312}\n");
  const RunResult codim = run_cli("query codim 31524");
  CHECK(codim.exit_code == 0);
  CHECK(codim.out == "4\n");
}

TEST_CASE("the chain-length flag reports the combinatorial criterion") {
  const RunResult cm = run_cli("query codim \"0,1,0;1,-1,1;0,1,0\" --cm");
  CHECK(cm.exit_code == 0);
  CHECK(cm.out.find("conjecturally CM") != std::string::npos);
}

TEST_CASE("pi applies operator words right to left") {
  const RunResult r = run_cli("pi row 31524 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "31254\n");
  const RunResult fixed = run_cli("pi row 1234 2");
  CHECK(fixed.out == "1234\n");
  const RunResult anti = run_cli("pi row \"{231,312}\" 2");
  CHECK(anti.out == "{213}\n");
  const RunResult col = run_cli("pi col 231 1");
  CHECK(col.out == "132\n");
  const RunResult bad = run_cli("pi row 1234 7");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("poly prints canonical text and exact json") {
  const RunResult text = run_cli("poly groth single \"{213,132}\" --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "2*x1 + x2 - x1^2 - 2*x1*x2 + x1^2*x2\n");
  const RunResult both = run_cli("poly schub double 21");
  CHECK(both.exit_code == 0);
  CHECK(both.out.find("x1 - y1\n") != std::string::npos);
  CHECK(both.out.find("\"terms\"") != std::string::npos);
  const RunResult big = run_cli("poly groth single 123465");
  CHECK(big.exit_code == 3);  // above the feasibility bound without --nmax
  const RunResult ok6 = run_cli("poly schub single 123465 --nmax 6");
  CHECK(ok6.exit_code == 0);
  CHECK(ok6.out.find("x5") != std::string::npos);
}

TEST_CASE("poset exports dot and json") {
  const RunResult dot = run_cli("poset weak asm 2");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("digraph weak_asm_2 {") == 0);
  CHECK(dot.out.find("label=\"1\"") != std::string::npos);
  const RunResult js = run_cli("poset strong asm 2 json");
  CHECK(js.exit_code == 0);
  CHECK(js.out.find("\"edges\":[[0,1,0]]") != std::string::npos);
  const RunResult interval = run_cli("poset weak asm --root \"0,1,0,0;1,-1,0,1;0,1,0,0;0,0,1,0\" --format json");
  CHECK(interval.exit_code == 0);
  CHECK(interval.out.find("\"nodes\":[") != std::string::npos);
}

TEST_CASE("verify runs a suite and all suites") {
  const RunResult one = run_cli("verify paper-examples");
  CHECK(one.exit_code == 0);
  CHECK(one.out == "pass  paper-examples  universe=\"worked examples\"  checked=28  failures=0\n");
  const RunResult all = run_cli("verify all 3");
  CHECK(all.exit_code == 0);
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') >= 30);
  CHECK(all.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify rejects unknown suites and out-of-range universes") {
  CHECK(run_cli("verify no-such-suite").exit_code == 2);
  CHECK(run_cli("verify covers 99").exit_code == 3);
  CHECK(run_cli("verify covers 0").exit_code == 2);
}

TEST_CASE("malformed inputs exit with code 2") {
  CHECK(run_cli("query rank \"0,1;2,-1\"").exit_code == 2);
  CHECK(run_cli("query rank not-a-matrix").exit_code == 2);
  CHECK(run_cli("enumerate asm 9").exit_code == 3);
  CHECK(run_cli("pi row \"{123,213}\" 1").exit_code == 2);
  const RunResult msg = run_cli("query rank \"0,1;2,-1\"", true);
  CHECK(msg.out.find("error") != std::string::npos);
}

TEST_CASE("stdout is byte-identical across repeated invocations") {
  const std::string cmds[] = {
      "verify all 3",
      "enumerate asm 4",
      "poly groth double \"0,1,0;1,-1,1;0,1,0\"",
      "poset weak antichain 3",
  };
  for (const std::string& c : cmds) {
    const RunResult a = run_cli(c);
    const RunResult b = run_cli(c);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("the polynomial cache persists across runs") {
  const std::string dir = "cli_cache_dir";
  std::remove((dir + "/poly-cache.jsonl").c_str());
  std::remove(dir.c_str());
  REQUIRE(system(("mkdir -p " + dir).c_str()) == 0);
  const RunResult cold = run_cli("poly groth single \"0,1,0,0;1,-1,1,0;0,1,-1,1;0,0,1,0\" --cache-dir " + dir + " --format text");
  CHECK(cold.exit_code == 0);
  std::ifstream cachefile(dir + "/poly-cache.jsonl");
  REQUIRE(cachefile.good());
  std::string header;
  std::getline(cachefile, header);
  CHECK(header.find("asmvar-poly-cache") != std::string::npos);
  const RunResult warm = run_cli("poly groth single \"0,1,0,0;1,-1,1,0;0,1,-1,1;0,0,1,0\" --cache-dir " + dir + " --format text");
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
}

TEST_CASE("reading input from a file") {
  const std::string path = "cli_input.txt";
  {
    std::ofstream out(path);
    out << "0,1,0;1,-1,1;0,1,0";
  }
  const RunResult r = run_cli("query perm-set " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{231,312}\n");
  std::remove(path.c_str());
}

}  // TEST_SUITE("cli")
