// Contract tests for the installed command-line binary: spawns the real
// executable (path injected by the build as ALSP_CLI_PATH) and checks exit
// codes and the exact text/CSV/JSON surfaces.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string out;  // stdout only, or merged when merge_stderr
};

RunResult run(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
  const std::string redirect = merge_stderr ? " 2>&1" : " 2>/dev/null";
  const std::string prefix =
      env.empty() ? "env -u ALSP_HURWITZ_CACHE " : "env -u ALSP_HURWITZ_CACHE " + env + " ";
  const std::string cmd = prefix + ALSP_CLI_PATH + " " + args + redirect;
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::path("/tmp") /
           ("alsp_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("global surface") {
  CHECK(run("--version").out == "1.0.0\n");
  CHECK(run("--version").code == 0);
  const RunResult help = run("--help");
  CHECK(help.code == 0);
  CHECK(contains(help.out, "dim"));
  CHECK(contains(help.out, "equid"));
  CHECK(run("", true).code == 2);               // a subcommand is required
  CHECK(run("frobnicate", true).code == 2);     // unknown subcommand
  CHECK(run("dim --N 1 --k 12 --format yaml", true).code == 2);  // unknown format
}

TEST_CASE("dim text forms") {
  CHECK(run("dim --N 1 --k 12").out == "dim S_12(1) = 1\n");
  CHECK(run("dim --N 11 --k 2 --space new").out == "dim S_2^new(11) = 1\n");
  CHECK(run("dim --N 1 --k 12").code == 0);

  // forced vanishing: newspace pattern with '+' at the exact power 4
  const RunResult r = run("dim --N 20 --k 2 --space new --sigma 4:+,5:-");
  CHECK(r.code == 0);
  REQUIRE(lines(r.out).size() == 3);  // header, one row, summary
  CHECK(contains(lines(r.out)[1], " 0"));
  CHECK(contains(lines(r.out)[2], "space_dim = 1, sum over sigma = 0"));
}

TEST_CASE("dim all-sigmas csv") {
  const RunResult r = run("dim --N 36 --k 12 --space new --all-sigmas --format csv");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);  // header + 2^omega(36) rows
  CHECK(ls[0] == "N,k,space,sigma,dim,space_dim,share,predicted,residual");
  CHECK(contains(ls[1], "36,12,new,4:+,9:+,"));
  // the sigma dimensions must sum to the space dimension
  long long sum = 0, space_dim = -1;
  for (size_t i = 1; i < ls.size(); ++i) {
    // columns: N,k,space,sigma(two commas!),dim,space_dim,...
    // sigma always has the form "4:x,9:y" here, so dim is field 5 (0-based)
    std::vector<std::string> f;
    std::string cur;
    for (char c : ls[i]) {
      if (c == ',') {
        f.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    f.push_back(cur);
    REQUIRE(f.size() == 10);
    sum += std::stoll(f[5]);
    space_dim = std::stoll(f[6]);
  }
  CHECK(sum == space_dim);

  // --sigma and --all-sigmas are mutually exclusive
  CHECK(run("dim --N 36 --k 12 --sigma 4:+,9:+ --all-sigmas", true).code == 2);
}

TEST_CASE("trace output and errors") {
  const RunResult csv = run("trace --N 1 --k 12 --m 2 --format csv");
  CHECK(csv.code == 0);
  const auto ls = lines(csv.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "N,k,m,Q,sigma,space,exact,normalized,predicted,residual");
  CHECK(contains(ls[1], "1,12,2,1,,full,-24,"));

  const RunResult js = run("trace --N 1 --k 12 --m 4 --format json");
  CHECK(js.code == 0);
  CHECK(contains(js.out, "\"exact\":\"-1472\""));
  CHECK(contains(js.out, "\"cmd\":\"trace\""));

  const RunResult sig = run("trace --N 12 --k 4 --m 5 --sigma 4:-,3:- --format csv");
  CHECK(sig.code == 0);
  CHECK(contains(lines(sig.out)[1], "12,4,5,,4:-,3:-,"));

  CHECK(run("trace --N 10 --k 4 --m 5", true).code == 2);   // gcd(m, N) != 1
  CHECK(run("trace --N 12 --k 4 --Q 2", true).code == 2);   // 2 not an exact divisor
  CHECK(run("trace --N 12 --k 3", true).code == 2);         // odd weight
  CHECK(run("trace --N 12 --k 4 --Q 3 --sigma 4:+,3:+", true).code == 2);  // exclusive
}

TEST_CASE("verify command") {
  const RunResult tau = run("verify --suite tau");
  CHECK(tau.code == 0);
  CHECK(tau.out == "verify tau: 5 checks, 0 failures\n");
  const RunResult hur = run("verify --suite hurwitz --max 200");
  CHECK(hur.code == 0);
  CHECK(hur.out == "verify hurwitz: 201 checks, 0 failures\n");
  const RunResult alias = run("verify --suite hurwitz --max-N 200");
  CHECK(alias.out == hur.out);
  CHECK(run("verify --suite nope", true).code == 2);
  CHECK(run("verify", true).code == 2);  // --suite required
}

TEST_CASE("equid grid output") {
  const RunResult csv = run("equid --p 2 --k 12 --N-list 1 --max-n 4 --format csv");
  CHECK(csv.code == 0);
  const auto ls = lines(csv.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "p,N,k,sigma,space,n,observed,target,deviation");
  CHECK(ls[1] == "2,1,12,,full,0,1,1,0");
  CHECK(contains(ls[2], "2,1,12,,full,1,-0.53033008589,0,"));

  // flagged rows keep the numeric cells empty in CSV
  const RunResult flagged = run("equid --p 3 --k 12 --N 9 --max-n 2 --format csv");
  CHECK(flagged.code == 0);
  const auto fl = lines(flagged.out);
  REQUIRE(fl.size() == 3);
  CHECK(fl[1] == "3,9,12,9:+,full,,,,");
  CHECK(fl[2] == "3,9,12,9:-,full,,,,");

  // ...and the table format carries an explicit flag column
  const RunResult table = run("equid --p 3 --k 12 --N 9 --max-n 2");
  CHECK(contains(lines(table.out)[0], "flag"));
  CHECK(contains(table.out, "p-divides-level"));

  // JSON: flagged rows use nulls, and --jobs cannot change a single byte
  const std::string args = "equid --p 2 --k 2,4 --N-list 9-11 --max-n 3 --format json";
  const RunResult j1 = run(args + " --jobs 1");
  const RunResult j4 = run(args + " --jobs 4");
  CHECK(j1.code == 0);
  CHECK(j1.out == j4.out);
  CHECK(contains(j1.out, "\"flag\":\"p-divides-level\""));
  CHECK(contains(j1.out, "\"observed\":null"));
  CHECK(contains(j1.out, "\"flagged\":"));
}

TEST_CASE("equid trend verdicts") {
  const std::string base = "equid --p 2 --k 2 --N-list 101,1009 --max-n 4 --trend";
  const RunResult table = run(base);
  CHECK(table.code == 0);
  CHECK(contains(table.out, "trend sigma=+: 1.5 -> 0.148648648649 [non-increasing]"));
  CHECK(contains(table.out, "trend verdict: ok"));

  // CSV keeps stdout machine-pure; the verdict goes to stderr
  const RunResult csv_out = run(base + " --format csv");
  CHECK(!contains(csv_out.out, "trend"));
  const RunResult csv_all = run(base + " --format csv", true);
  CHECK(contains(csv_all.out, "trend verdict: ok"));

  // trend across levels with different factor counts is a usage error
  CHECK(run("equid --p 5 --k 2 --N-list 1,12 --max-n 2 --trend", true).code == 2);
}

TEST_CASE("equid argument validation") {
  CHECK(run("equid --p 4 --k 12 --N 1", true).code == 2);        // p not prime
  CHECK(run("equid --p 2 --k 11 --N 1", true).code == 2);        // odd weight
  CHECK(run("equid --p 2 --k 12 --N 5-1", true).code == 2);      // bad span
  CHECK(run("equid --p 2 --k 12 --N 0", true).code == 2);        // below minimum
  CHECK(run("equid --p 2 --k 12 --N 1 --max-n -1", true).code == 2);
  CHECK(run("equid --p 2 --k 12,10-14:2 --N 1 --max-n 1").code == 0);  // list syntax
}

TEST_CASE("cache lifecycle") {
  TempDir tmp;
  const std::string p = tmp.file("h.cache");

  const RunResult built = run("cache build --max 100 --out " + p);
  CHECK(built.code == 0);
  CHECK(contains(built.out, "cache built:"));
  CHECK(contains(built.out, "max=100"));
  {
    std::ifstream in(p);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "# alsp-hurwitz v1 max=100");
  }

  CHECK(contains(run("cache build --max 50 --out " + p).out, "cache ok:"));
  CHECK(contains(run("cache build --max 150 --out " + p).out, "cache built:"));
  const RunResult check = run("cache check " + p);
  CHECK(check.code == 0);
  CHECK(contains(check.out, "max=150"));

  // corruption is loud, names the line, and never gets silently rebuilt
  std::ofstream(p, std::ios::app) << "17,bogus\n";
  const RunResult bad = run("cache check " + p, true);
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "cache-format"));
  CHECK(contains(bad.out, "line"));
  const RunResult dim_bad = run("dim --N 1 --k 12 --cache " + p, true);
  CHECK(dim_bad.code == 1);
  CHECK(contains(dim_bad.out, "cache-format"));

  // a zero-entry table is still a valid cache
  const std::string p0 = tmp.file("h0.cache");
  CHECK(contains(run("cache build --max 0 --out " + p0).out, "max=0"));
  CHECK(run("cache check " + p0).code == 0);

  CHECK(run("cache build --max 10", true).code == 2);  // nowhere to write
  CHECK(run("cache check /nonexistent/h.cache", true).code == 1);
  CHECK(run("cache", true).code == 2);  // build/check required
}

TEST_CASE("cache environment default and override") {
  TempDir tmp;
  const std::string env_path = tmp.file("env.cache");
  const std::string flag_path = tmp.file("flag.cache");

  const RunResult viaenv =
      run("dim --N 11 --k 2", false, "ALSP_HURWITZ_CACHE=" + env_path);
  CHECK(viaenv.code == 0);
  CHECK(std::filesystem::exists(env_path));  // created on demand, covers 4N

  const RunResult viaflag = run("dim --N 11 --k 2 --cache " + flag_path, false,
                                "ALSP_HURWITZ_CACHE=" + env_path);
  CHECK(viaflag.code == 0);
  CHECK(std::filesystem::exists(flag_path));  // --cache wins over the env var

  // the environment-made cache is loadable and sufficient on the second run
  const RunResult again =
      run("dim --N 11 --k 2", false, "ALSP_HURWITZ_CACHE=" + env_path);
  CHECK(again.out == "dim S_2(11) = 1\n");
}

TEST_SUITE_END();
