// Golden-file tests for the CLI: every subcommand is pinned byte-for-byte
// (stdout+stderr with --no-timing) together with its exit code. Regenerate
// with BFORM_REGEN=1 after an intentional output change and review the diff.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli_cases.hpp"

using namespace bform::cli_cases;

namespace {

std::string strip_timing(std::string text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"elapsed_ms\"") != std::string::npos) continue;
    out << line << "\n";
  }
  std::string s = out.str();
  // drop a trailing comma before } left by removing the last member
  std::size_t pos;
  while ((pos = s.find(",\n}")) != std::string::npos) s.erase(pos, 1);
  return s;
}

}  // namespace

TEST_CASE("golden outputs and exit codes for every subcommand") {
  bool regen = std::getenv("BFORM_REGEN") != nullptr;
  for (const auto& inv : invocations()) {
    CAPTURE(inv.name);
    auto [out, code] = run_cli(inv.args);
    CHECK(code == inv.expect_exit);
    if (regen) {
      std::ofstream f(golden_path(inv.name));
      f << "exit=" << inv.expect_exit << "\n" << out;
      continue;
    }
    std::string err = check_invocation(inv);
    CHECK_MESSAGE(err.empty(), err);
  }
}

TEST_CASE("reports are byte-identical modulo the timing field") {
  std::string args =
      "su --dim 4 'exp(i*(dx1^dx2+dx3^dx4))' '(dx1+i*dx2)^(dx3+i*dx4)' --json";
  auto [out1, code1] = run_cli(args);
  auto [out2, code2] = run_cli(args);
  CHECK(code1 == 0);
  CHECK(code2 == 0);
  CHECK(strip_timing(out1) == strip_timing(out2));
  CHECK(out1.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("stdin and @file expression sources") {
  std::string tmp = std::string(BFORM_GOLDEN_DIR) + "/../tmp_expr.txt";
  {
    std::ofstream f(tmp);
    f << "exp(i*dx1^dx2)";
  }
  auto [out, code] = run_cli("classify --dim 2 '@" + tmp + "' --no-timing");
  CHECK(code == 0);
  CHECK(out.find("accept") != std::string::npos);
  std::remove(tmp.c_str());

  std::string cmd = std::string("printf 'exp(i*dx1^dx2)' | ") + BFORM_BIN +
                    " classify --dim 2 - --no-timing 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string sout;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) sout.append(buf.data(), got);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(sout.find("accept") != std::string::npos);
}
