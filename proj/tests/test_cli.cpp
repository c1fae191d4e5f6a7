// End-to-end checks of the installed binary: spawns the CLI found via
// HP0_CLI_BIN on the frames in HP0_DATA_DIR.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

int failures = 0;

#define REQUIRE_CLI(cond)                                                     \
  do {                                                                        \
    if (!(cond)) {                                                            \
      std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);    \
      ++failures;                                                             \
    }                                                                         \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("HP0_CLI_BIN");
  RunResult res;
  if (!bin) return res;
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("HP0_DATA_DIR");
  return (dir ? std::string(dir) : std::string(".")) + "/" + name;
}

}  // namespace

int main() {
  if (!std::getenv("HP0_CLI_BIN")) {
    std::fprintf(stderr, "HP0_CLI_BIN not set\n");
    return 1;
  }

  // spec'd example: hilbert table of the triangle frame
  auto hil = run("hilbert --d-max 3 " + data("tri.frame"));
  REQUIRE_CLI(hil.exit_code == 0);
  REQUIRE_CLI(hil.out == "1\t3\t5\t7\n");

  // full report on the all-ones frame: everything verifies, exit 0
  auto rep = run("report --d-max 6 " + data("u13.frame"));
  REQUIRE_CLI(rep.exit_code == 0);
  REQUIRE_CLI(rep.out.find("\"degeneration_ok\": true") != std::string::npos);
  REQUIRE_CLI(rep.out.find("\"ok\": true") != std::string::npos);

  // circuits of an identity frame: none, exit 0
  auto circ = run("circuits --format tsv " + data("id2.frame"));
  REQUIRE_CLI(circ.exit_code == 0);
  REQUIRE_CLI(circ.out.empty());

  // byte-identical output for identical config
  auto a = run("report --d-max 5 --seed 3 " + data("tri.frame"));
  auto b = run("report --d-max 5 --seed 3 " + data("tri.frame"));
  REQUIRE_CLI(a.exit_code == 0);
  REQUIRE_CLI(a.out == b.out);

  // hilbert data is invariant under --ordering
  auto h1 = run("hilbert --d-max 4 " + data("quad.frame"));
  auto h2 = run("hilbert --d-max 4 --ordering 4,2,3,1 " + data("quad.frame"));
  REQUIRE_CLI(h1.exit_code == 0);
  REQUIRE_CLI(h1.out == h2.out);

  // unreadable input: exit 1 with a message
  auto missing = run("hilbert /nonexistent.frame");
  REQUIRE_CLI(missing.exit_code == 1);
  REQUIRE_CLI(missing.out.find("cannot open") != std::string::npos);

  // non-unimodular frame: exit 1 citing the offending minor
  auto badframe = run("circuits " + data("bad.frame"));
  REQUIRE_CLI(badframe.exit_code == 1);
  REQUIRE_CLI(badframe.out.find("minor") != std::string::npos);
  REQUIRE_CLI(badframe.out.find("rows {2}") != std::string::npos);

  // JSON frame input works through the same path
  auto js = run("hilbert --d-max 2 " + data("tri.json"));
  REQUIRE_CLI(js.exit_code == 0);
  REQUIRE_CLI(js.out == "1\t3\t5\n");

  // paper-degree labels double the degree column
  auto paper = run("hilbert --d-max 2 --format json --paper-degrees " + data("tri.frame"));
  REQUIRE_CLI(paper.out.find("\"degrees\": [") != std::string::npos);
  REQUIRE_CLI(paper.out.find("0,\n    2,\n    4") != std::string::npos);

  if (failures == 0) std::printf("cli tests passed\n");
  return failures == 0 ? 0 : 1;
}
