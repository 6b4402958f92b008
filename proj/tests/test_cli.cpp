#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(WALLCROSS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("wall-crossing matrix at 1/2 in LaTeX") {
  Run r = cli("wallcross --n 2 --slope 1/2 --format latex --no-cache");
  CHECK(r.status == 0);
  CHECK(r.out == "\\begin{pmatrix}\n1 & 0 \\\\\nq_2 - \\frac{1}{q_1} & 1\n\\end{pmatrix}_{\\frac{1}{2}}\n");
}

TEST_CASE("bar matrix A_2 as JSON") {
  Run r = cli("fock-bar --n 2 --b 2 --format json --no-cache");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"[1,1]|[2]\": \"1*q^(1)*t^(0) - 1*q^(-1)*t^(0)\""));
  CHECK(contains(r.out, "\"b\": 2"));
}

TEST_CASE("conjecture check for four points") {
  Run r = cli("conjecture-check --n 4 --no-cache");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"status\": \"match\""));
  CHECK(!contains(r.out, "mismatch"));
  CHECK(!contains(r.out, "millis"));
  CHECK(contains(cli("conjecture-check --n 2 --timing --no-cache").out, "millis"));
}

TEST_CASE("other commands") {
  CHECK(cli("appendix-check").status == 0);
  Run c = cli("characters --slope 1/2 --format csv");
  CHECK(c.status == 0);
  CHECK(contains(c.out, "normalized,s,[2],1*q1^(0)*q2^(0)"));
  CHECK(cli("positivity --n 2 --slope 1/2").status == 0);
  CHECK(contains(cli("macdonald --n 2 --format latex").out, "\\widetilde{H}_{[2]} = s_{2} + q_1 s_{1,1}"));
  CHECK(contains(cli("canonical --n 2 --b 2 --side - --format csv --no-cache").out, "\"[1,1]\",[2],-1*q^(-1)*t^(0)"));
  CHECK(contains(cli("stable --n 1 --slope 0 --no-cache").out, "\"[1]|[1]\""));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli("").status == 2);
  CHECK(cli("no-such-command").status == 2);
  CHECK(cli("fock-bar --n 2").status == 2);
  CHECK(cli("fock-bar --n 2 --b 2 --format xml").status == 2);
  CHECK(cli("stable --n 2 --slope 1/2 --side x").status == 2);
  CHECK(cli("stable --n 2 --slope abc").status == 2);
  CHECK(cli("conjecture-check --n 3 --format latex").status == 2);
  CHECK(cli("characters --slope -1/2").status == 2);
  CHECK(cli("conjecture-check --n 3 --jobs 0").status == 2);
}

TEST_CASE("cache directory from the environment") {
  char tmpl[] = "/tmp/wallcross-cli-XXXXXX";
  REQUIRE(mkdtemp(tmpl) != nullptr);
  std::string dir = tmpl;
  Run a = cli("stable --n 3 --slope 2/3");
  Run b = cli("stable --n 3 --slope 2/3 --cache-dir " + dir);
  Run c = cli("stable --n 3 --slope 2/3 --cache-dir " + dir);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  setenv("WALLCROSS_CACHE", dir.c_str(), 1);
  Run d = cli("fock-bar --n 3 --b 2");
  unsetenv("WALLCROSS_CACHE");
  CHECK(d.status == 0);
  long files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
  CHECK(files == 2);
  std::filesystem::remove_all(dir);
}
