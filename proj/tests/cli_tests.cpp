#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

// End-to-end checks against the installed command-line interface; the
// binary path comes from the build system.

namespace {

struct CliResult {
  int status = -1;
  std::string output;  // stdout and stderr combined

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

std::string shell_quote(const std::string& arg) { return "'" + arg + "'"; }

CliResult run_cli(const std::vector<std::string>& args) {
  std::string command = LTLDOM_CLI_PATH;
  for (const auto& arg : args) command += " " + shell_quote(arg);
  command += " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[512];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int rc = pclose(pipe);
  REQUIRE(rc != -1);
  result.status = WEXITSTATUS(rc);
  return result;
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    std::string templ = (std::filesystem::temp_directory_path() / "ltldom-cli-XXXXXX").string();
    REQUIRE(mkdtemp(templ.data()) != nullptr);
    path = templ;
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    const std::string full = file(name);
    std::ofstream out(full);
    out << text;
    return full;
  }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("eval prints a verdict and the matching exit code") {
  const CliResult yes = run_cli({"eval", "--formula", "!( !p << p )", "--word", ";{}{p}"});
  CHECK(yes.status == 0);
  CHECK(yes.contains("RESULT true"));

  const CliResult no = run_cli({"eval", "--formula", "true << p", "--word", ";{p}"});
  CHECK(no.status == 1);
  CHECK(no.contains("RESULT false"));

  const CliResult at = run_cli(
      {"eval", "--formula", "p", "--word", "{p};{}", "--position", "1"});
  CHECK(at.status == 1);
}

TEST_CASE("eval --explain shows drifts and the label row") {
  const CliResult r = run_cli(
      {"eval", "--formula", "!( !p << p )", "--word", ";{}{p}", "--explain"});
  CHECK(r.status == 0);
  CHECK(r.contains("drift(!p << p) = 0"));
  CHECK(r.contains("labels at position 0"));
  CHECK(r.contains("!p << p = false"));
}

TEST_CASE("eval rejects bad input with status 2") {
  CHECK(run_cli({"eval", "--formula", "p U", "--word", ";{p}"}).status == 2);
  CHECK(run_cli({"eval", "--formula", "p", "--word", "{p};"}).status == 2);
  CHECK(run_cli({"eval", "--formula", "p"}).status == 2);  // missing --word
}

TEST_CASE("accept runs the builtin automaton") {
  const CliResult yes = run_cli({"accept", "--automaton", "builtin:lomega", "--word", ";ab"});
  CHECK(yes.status == 0);
  CHECK(yes.contains("counter c0: drift 0"));
  CHECK(yes.contains("RESULT accepted"));

  const CliResult no = run_cli({"accept", "--automaton", "builtin:lomega", "--word", ";a"});
  CHECK(no.status == 1);
  CHECK(no.contains("RESULT rejected"));
}

TEST_CASE("accept rejects an invalid automaton with its violations") {
  const TempDir dir;
  const std::string bad = dir.write("bad.json",
                                    R"({"states":["q"],"counters":[],"alphabet":["a","b"],
      "initial":"q","delta":[{"from":"q","symbol":"a","to":"q","inc":[],"dec":[]}],
      "phi":"true"})");
  const CliResult r = run_cli({"accept", "--automaton", bad, "--word", ";a"});
  CHECK(r.status == 2);
  CHECK(r.contains("delta not total"));
}

TEST_CASE("builtin writes a loadable automaton file") {
  const TempDir dir;
  const std::string out = dir.file("lomega.json");
  const CliResult wrote = run_cli({"builtin", "lomega", "--out", out});
  CHECK(wrote.status == 0);
  CHECK(wrote.contains("RESULT ok"));

  const CliResult accepted = run_cli({"accept", "--automaton", out, "--word", ";ab"});
  CHECK(accepted.status == 0);

  // deterministic writer: a second run produces identical bytes
  const std::string out2 = dir.file("lomega2.json");
  REQUIRE(run_cli({"builtin", "lomega", "--out", out2}).status == 0);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string bytes = slurp(out);
  CHECK(!bytes.empty());
  CHECK(bytes == slurp(out2));
}

TEST_CASE("boolean complement flips the verdict") {
  const TempDir dir;
  const std::string out = dir.file("comp.json");
  const CliResult wrote =
      run_cli({"boolean", "complement", "--automaton", "builtin:lomega", "--out", out});
  CHECK(wrote.status == 0);
  CHECK(run_cli({"accept", "--automaton", out, "--word", ";a"}).status == 0);
  CHECK(run_cli({"accept", "--automaton", out, "--word", ";ab"}).status == 1);
}

TEST_CASE("boolean product intersects languages") {
  const TempDir dir;
  const std::string comp = dir.file("comp.json");
  REQUIRE(run_cli({"boolean", "complement", "--automaton", "builtin:lomega", "--out", comp})
              .status == 0);
  const std::string never = dir.file("never.json");
  const CliResult wrote = run_cli({"boolean", "product", "--left", "builtin:lomega", "--right",
                                   comp, "--mode", "and", "--out", never});
  CHECK(wrote.status == 0);
  CHECK(run_cli({"accept", "--automaton", never, "--word", ";ab"}).status == 1);
  CHECK(run_cli({"accept", "--automaton", never, "--word", ";a"}).status == 1);

  const std::string other = dir.write("other.json",
                                      R"({"states":["q"],"counters":[],"alphabet":["x"],
      "initial":"q","delta":[{"from":"q","symbol":"x","to":"q","inc":[],"dec":[]}],
      "phi":"true"})");
  const CliResult mismatch = run_cli({"boolean", "product", "--left", "builtin:lomega", "--right",
                                      other, "--mode", "and", "--out", dir.file("x.json")});
  CHECK(mismatch.status == 2);
  CHECK(mismatch.contains("alphabet mismatch"));
}

TEST_CASE("check equiv, unsat and agree") {
  const CliResult ok = run_cli(
      {"check", "equiv", "--f", "true ~ p", "--g", "F G p", "--samples", "300"});
  CHECK(ok.status == 0);
  CHECK(ok.contains("trials: 300"));
  CHECK(ok.contains("RESULT ok"));

  const CliResult cex = run_cli({"check", "equiv", "--f", "p", "--g", "X p"});
  CHECK(cex.status == 1);
  CHECK(cex.contains("counterexample"));
  CHECK(cex.contains("position:"));

  CHECK(run_cli({"check", "unsat", "--f", "true << p", "--samples", "300"}).status == 0);
  CHECK(run_cli({"check", "unsat", "--f", "p"}).status == 1);

  const TempDir dir;
  const std::string map = dir.write("map.txt", "{p} -> a\n{} -> b\n");
  const CliResult agree =
      run_cli({"check", "agree", "--f", "!p ~ p", "--automaton", "builtin:lomega", "--map", map,
               "--samples", "300"});
  CHECK(agree.status == 0);
  CHECK(agree.contains("RESULT ok"));

  // the one-sided formula admits words the automaton rejects
  const CliResult lopsided =
      run_cli({"check", "agree", "--f", "!( !p << p )", "--automaton", "builtin:lomega", "--map",
               map, "--samples", "300"});
  CHECK(lopsided.status == 1);
  CHECK(lopsided.contains("RESULT counterexample"));

  const std::string bad_map = dir.write("bad_map.txt", "{p} a\n");
  CHECK(run_cli({"check", "agree", "--f", "p", "--automaton", "builtin:lomega", "--map", bad_map})
            .status == 2);
}

TEST_CASE("usage errors exit with status 2, help with 0") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli({"--help"}).status == 0);
  CHECK(run_cli({"check"}).status == 2);  // missing subcommand
}

TEST_SUITE_END();
