#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "gcs/io.hpp"

namespace {

struct CmdResult {
  int status = -1;       // exit code, or -1 when the process died abnormally
  std::string output;    // stdout and stderr interleaved
};

// Runs the built binary through the shell with stderr folded into stdout.
CmdResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(GCS_CLI_PATH) + " " + args +
      " 2>&1";
  CmdResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int raw = pclose(pipe);
  if (WIFEXITED(raw)) res.status = WEXITSTATUS(raw);
  return res;
}

// A fresh scratch directory per fixture object; files accumulate inside it.
struct TempDir {
  std::string path;
  TempDir() {
    char tmpl[] = "/tmp/gcs_cli_XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    path = tmpl;
  }
  std::string file(const std::string& name) const { return path + "/" + name; }
};

std::string golden(const std::string& name) {
  return gcs::read_file(std::string(GCS_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("generate constructs, verifies, and stores the reference set") {
  TempDir dir;
  const CmdResult res = run_cli(
      "generate --p 4 --q 4 --L 19 --pi 1,2 --g 3:1,1 --c 0,0,0 --c-prime 0 -o " +
      dir.file("set.json"));
  CHECK(res.status == 0);
  CHECK(res.output.find("(4, 16->16, 19)") != std::string::npos);
  CHECK(res.output.find("verdict PASS") != std::string::npos);

  const gcs::LoadedSet set = gcs::load_set_json(gcs::read_file(dir.file("set.json")));
  CHECK(set.q == 4);
  REQUIRE(set.rows.size() == 16);
  CHECK(set.rows.front().size() == 19);
  // first stored row must agree with the bundled matrix's first line
  const std::string table = golden("table1.csv");
  const std::string first_line = table.substr(0, table.find('\n'));
  CHECK(gcs::matrix_csv({set.rows.front()}) == first_line + "\n");
}

TEST_CASE("generate rejects a modulus that is not a multiple of the base") {
  const CmdResult res = run_cli("generate --p 3 --q 4 --L 9");
  CHECK(res.status == 1);
  CHECK(res.output.find("multiple of p") != std::string::npos);
}

TEST_CASE("generate reports duplicate collapse for power-of-base lengths") {
  TempDir dir;
  const CmdResult res = run_cli("generate --p 2 --q 2 --L 8 --seed 7 -o " +
                                dir.file("pair.json"));
  CHECK(res.status == 0);
  CHECK(res.output.find("4->2") != std::string::npos);
  CHECK(res.output.find("verdict PASS") != std::string::npos);
}

TEST_CASE("verify accepts stored output and rejects a corrupted copy") {
  TempDir dir;
  REQUIRE(run_cli("generate --p 4 --q 4 --L 19 -o " + dir.file("set.json")).status == 0);

  const CmdResult ok = run_cli("verify " + dir.file("set.json"));
  CHECK(ok.status == 0);
  CHECK(ok.output.find("PASS") != std::string::npos);
  CHECK(ok.output.find("members 16, length 19") != std::string::npos);

  // flip one symbol of the bundled matrix and watch verification fail
  std::string table = golden("table1.csv");
  table[0] = table[0] == '0' ? '1' : '0';
  gcs::write_file(dir.file("bad.csv"), table);
  const CmdResult bad = run_cli("verify " + dir.file("bad.csv") + " --q 4");
  CHECK(bad.status == 2);
  CHECK(bad.output.find("FAIL") != std::string::npos);
}

TEST_CASE("verify requires the alphabet size for bare matrices") {
  TempDir dir;
  gcs::write_file(dir.file("rows.csv"), "0,1\n1,0\n");
  const CmdResult res = run_cli("verify " + dir.file("rows.csv"));
  CHECK(res.status == 1);
  CHECK(res.output.find("--q is required") != std::string::npos);
}

TEST_CASE("verify reports malformed input as a usage error") {
  TempDir dir;
  gcs::write_file(dir.file("ragged.csv"), "0,1\n0\n");
  const CmdResult res = run_cli("verify " + dir.file("ragged.csv") + " --q 2");
  CHECK(res.status == 1);
  CHECK(res.output.find("line 2") != std::string::npos);

  const CmdResult missing = run_cli("verify " + dir.file("nope.csv") + " --q 2");
  CHECK(missing.status == 1);
}

TEST_CASE("pmepr writes per-member ratios and enforces the bound") {
  TempDir dir;
  const CmdResult res =
      run_cli("pmepr " + std::string(GCS_GOLDEN_DIR) + "/table1.csv --q 4 -o " +
              dir.file("pm.csv"));
  CHECK(res.status == 0);
  CHECK(res.output.find("within bound") != std::string::npos);
  const std::string csv = gcs::read_file(dir.file("pm.csv"));
  CHECK(csv.find("member_index,gamma,pmepr\n") == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += (ch == '\n');
  CHECK(lines == 17);  // header + 16 members

  // a lone constant row exceeds its singleton bound
  gcs::write_file(dir.file("flat.csv"), "0,0,0,0,0,0,0,0\n");
  const CmdResult flat =
      run_cli("pmepr " + dir.file("flat.csv") + " --q 2 -o " + dir.file("f.csv"));
  CHECK(flat.status == 2);
  CHECK(flat.output.find("EXCEEDED") != std::string::npos);
  CHECK(flat.output.find("max PMEPR 8") != std::string::npos);
}

TEST_CASE("pmepr on a denser grid never reports a smaller peak") {
  TempDir dir;
  auto max_of = [&](const std::string& extra) {
    const CmdResult res =
        run_cli("pmepr " + std::string(GCS_GOLDEN_DIR) + "/table1.csv --q 4 " +
                extra + " -o " + dir.file("out.csv"));
    REQUIRE(res.status == 0);
    const std::size_t at = res.output.find("max PMEPR ");
    REQUIRE(at != std::string::npos);
    return std::stod(res.output.substr(at + 10));
  };
  const double coarse = max_of("--oversampling 64");
  const double dense = max_of("--oversampling 1024");
  CHECK(dense >= coarse - 1e-9);
  CHECK(dense <= 16.0 + 1e-6);
}

TEST_CASE("reproduce regenerates the bundled artifacts byte-for-byte") {
  TempDir dir;
  const CmdResult t = run_cli("reproduce --target table1 -o " + dir.file("t.csv"));
  CHECK(t.status == 0);
  CHECK(gcs::read_file(dir.file("t.csv")) == golden("table1.csv"));

  const CmdResult f = run_cli("reproduce --target fig1 -o " + dir.file("f.csv"));
  CHECK(f.status == 0);
  CHECK(gcs::read_file(dir.file("f.csv")) == golden("fig1.csv"));

  // "-" streams the artifact to stdout unchanged
  const CmdResult piped = run_cli("reproduce --target fig1 -o -");
  CHECK(piped.status == 0);
  CHECK(piped.output == golden("fig1.csv"));

  const CmdResult unknown = run_cli("reproduce --target nope");
  CHECK(unknown.status == 1);
}

TEST_CASE("sweep emits one verdict row per draw and skips impossible lengths") {
  TempDir dir;
  const CmdResult res = run_cli("sweep --count 10 --L-max 40 --seed 3 -o " +
                                dir.file("sweep.csv"));
  CHECK(res.status == 0);
  CHECK(res.output.find("10 draws, 0 skipped, 0 failures") != std::string::npos);
  const std::string csv = gcs::read_file(dir.file("sweep.csv"));
  CHECK(csv.find("p,q,L,m,k,M,verdict,max_sidelobe,max_pmepr\n") == 0);
  std::size_t lines = 0, passes = 0, pos = 0;
  for (char ch : csv) lines += (ch == '\n');
  while ((pos = csv.find(",pass,", pos)) != std::string::npos) {
    ++passes;
    pos += 1;
  }
  CHECK(lines == 11);
  CHECK(passes == 10);

  // fixing L below every drawable base records skipped rows without failing
  const CmdResult skip = run_cli("sweep --p 5 --count 2 --L 3 -o " +
                                 dir.file("skip.csv"));
  CHECK(skip.status == 0);
  CHECK(skip.output.find("2 skipped") != std::string::npos);
  CHECK(gcs::read_file(dir.file("skip.csv")).find("skipped: ") != std::string::npos);
}

TEST_CASE("sweep pinned to the reference parameters matches generate") {
  TempDir dir;
  const CmdResult res = run_cli(
      "sweep --p 4 --q-mult 1 --L 19 --pi 1,2 --g 3:1,1 --c 0,0,0 --c-prime 0 "
      "--count 1 --seed 9 -o " + dir.file("one.csv"));
  CHECK(res.status == 0);
  const std::string csv = gcs::read_file(dir.file("one.csv"));
  CHECK(csv.find("4,4,19,3,2,16,pass,") != std::string::npos);
}

TEST_CASE("results are reproducible run-to-run") {
  TempDir dir;
  REQUIRE(run_cli("generate --p 3 --q 6 --L 23 --seed 11 -o " +
                  dir.file("a.json")).status == 0);
  REQUIRE(run_cli("generate --p 3 --q 6 --L 23 --seed 11 -o " +
                  dir.file("b.json")).status == 0);
  CHECK(gcs::read_file(dir.file("a.json")) == gcs::read_file(dir.file("b.json")));

  REQUIRE(run_cli("sweep --count 5 --seed 21 -o " + dir.file("s1.csv")).status == 0);
  REQUIRE(run_cli("sweep --count 5 --seed 21 -o " + dir.file("s2.csv")).status == 0);
  CHECK(gcs::read_file(dir.file("s1.csv")) == gcs::read_file(dir.file("s2.csv")));
}

TEST_CASE("kernel selection is respected and validated") {
  TempDir dir;
  const CmdResult scalar = run_cli("--kernel scalar reproduce --target fig1 -o -");
  CHECK(scalar.status == 0);
  CHECK(scalar.output == golden("fig1.csv"));

  const CmdResult bogus = run_cli("--kernel warp9 generate --p 2 --q 2 --L 4");
  CHECK(bogus.status == 1);
  CHECK(bogus.output.find("unknown or unavailable") != std::string::npos);
  CHECK(bogus.output.find("scalar") != std::string::npos);

  const CmdResult env = run_cli("reproduce --target fig1 -o -",
                                "GCS_KERNEL=scalar");
  CHECK(env.status == 0);
  CHECK(env.output == golden("fig1.csv"));

  // an unknown environment selection warns and falls back instead of failing
  const CmdResult fallback = run_cli("reproduce --target fig1 -o -",
                                     "GCS_KERNEL=warp9");
  CHECK(fallback.status == 0);
  CHECK(fallback.output.find("warning: GCS_KERNEL=warp9") != std::string::npos);
  CHECK(fallback.output.find("tau,real,imag") != std::string::npos);
}

TEST_CASE("bare invocations fail with usage guidance, help succeeds") {
  const CmdResult none = run_cli("");
  CHECK(none.status == 1);

  const CmdResult help = run_cli("--help");
  CHECK(help.status == 0);
  CHECK(help.output.find("generate") != std::string::npos);
  CHECK(help.output.find("verify") != std::string::npos);

  const CmdResult oversize = run_cli("generate --p 2 --q 2 --L 8388609");
  CHECK(oversize.status == 3);  // refused as over the set-size budget
}

TEST_CASE("default output names land in the requested directory") {
  TempDir dir;
  const CmdResult res = run_cli("generate --p 2 --q 4 --L 6",
                                "GCS_OUTPUT_DIR=" + dir.path);
  CHECK(res.status == 0);
  CHECK(res.output.find(dir.file("gcs_set.json")) != std::string::npos);
  const gcs::LoadedSet set =
      gcs::load_set_json(gcs::read_file(dir.file("gcs_set.json")));
  CHECK(set.rows.size() == 4);  // p^k = 2^2 cosets, all distinct at L = 6
}
