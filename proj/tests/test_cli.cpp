#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#if __has_include(<sys/wait.h>)
#include <sys/wait.h>
#endif

#ifndef LPCRIT_CLI_PATH
#error "LPCRIT_CLI_PATH must point at the installed command line binary"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out = "cli_stdout_" + tag + ".txt";
  const std::string err = "cli_stderr_" + tag + ".txt";
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string("\"") + LPCRIT_CLI_PATH + "\" " + args + " > " + out + " 2> " + err;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
#if defined(WIFEXITED)
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
  r.code = status;
#endif
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: bounded verdict with certificate output") {
  const auto r = run_cli("verify-criterion --t pi/2 --s 1 --p 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: bounded"));
  CHECK(contains(r.out, "6.42458"));
  CHECK(contains(r.out, "shift norm <= 1.414"));
}

TEST_CASE("cli: symbolic lattice products are refused without arithmetic") {
  for (const char* t : {"pi", "-2pi", "3pi", "0"}) {
    CAPTURE(t);
    const auto r = run_cli(std::string("verify-criterion --t ") + t + " --s 1 --p 2");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "symbolic"));
  }
  // pi/2 * 2 also lands on the lattice, decided exactly
  const auto r = run_cli("verify-criterion --t pi/2 --s 2 --p 2");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "symbolic"));
}

TEST_CASE("cli: numeric near-lattice products fail the distance gate") {
  const auto r = run_cli("verify-criterion --t 3.141592653589793 --s 1 --p 2");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "quantization violated"));
  CHECK(!contains(r.out, "symbolic"));
  CHECK(contains(r.out, "distance"));
}

TEST_CASE("cli: json certificates are byte-identical across runs and threads") {
  const std::string args =
      "verify-criterion --t pi/2 --s 1 --p 2 --json cert_a.json";
  CHECK(run_cli(args).code == 0);
  const std::string first = slurp("cert_a.json");
  CHECK(run_cli(args).code == 0);
  CHECK(slurp("cert_a.json") == first);
  CHECK(run_cli(args, "LPCRIT_THREADS=4").code == 0);
  CHECK(slurp("cert_a.json") == first);
  CHECK(contains(first, "\"schema_version\": 1"));
  CHECK(contains(first, "\"bound\""));
  std::remove("cert_a.json");
}

TEST_CASE("cli: interval counterexample confirms with the log witness") {
  const auto r = run_cli("counterexample --kind one_d_pi --p 2 --M 1 --layers 5000");
  CHECK(r.code == 3);
  CHECK(contains(r.out, "counterexample confirmed: interval-family"));
  CHECK(contains(r.out, "after 13 layers (harmonic-log)"));
}

TEST_CASE("cli: lattice decay outside the certifiable window is a usage error") {
  const auto r = run_cli("counterexample --kind lattice_nd --n 2 --gamma 0.6 --p 1");
  CHECK(r.code == 64);
  CHECK(contains(r.err, "outside"));
}

TEST_CASE("cli: lattice run emits the layer table") {
  const auto r = run_cli(
      "counterexample --kind lattice_nd --n 2 --gamma 0.7 --p 1 --M 1 "
      "--layers 2000 --csv layers.csv --table-layers 50");
  CHECK(r.code == 3);
  const std::string csv = slurp("layers.csv");
  CHECK(csv.rfind("layer,partial_mass_lower,partial_sine_upper,partial_shift_upper\n",
                  0) == 0);
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 51);
  std::remove("layers.csv");
}

TEST_CASE("cli: layer tables are refused for kinds without layers") {
  const auto r = run_cli(
      "counterexample --kind vanishing_shift --s 2 --p 2 --M 5 --csv x.csv");
  CHECK(r.code == 64);
  CHECK(contains(r.err, "layer tables"));
}

TEST_CASE("cli: singleton vectors parse pi tokens per component") {
  const auto r = run_cli(
      "counterexample --kind singleton_nd --shift pi,0,0 --freq 1,0,0 --p 2 "
      "--M 1 --layers 2000");
  CHECK(r.code == 3);
  CHECK(contains(r.out, "singleton-collinear"));

  const auto bad = run_cli(
      "counterexample --kind singleton_nd --shift 1,0 --freq 1,0 --p 2 --M 1");
  CHECK(bad.code == 64);
}

TEST_CASE("cli: config file fills defaults, explicit flags still win") {
  {
    std::ofstream f("cfg.json");
    f << "{\"p\": 3.0, \"M\": 2.0}\n";
  }
  const auto filled =
      run_cli("counterexample --kind one_d_pi --layers 2000 --config cfg.json");
  CHECK(filled.code == 3);
  CHECK(contains(filled.out, "after 149 layers"));  // 0.4*log(K) >= 2

  const auto overridden = run_cli(
      "counterexample --kind one_d_pi --layers 2000 --config cfg.json --M 1");
  CHECK(overridden.code == 3);
  CHECK(contains(overridden.out, "after 13 layers"));
  std::remove("cfg.json");

  const auto missing = run_cli("counterexample --kind one_d_pi --config nope.json");
  CHECK(missing.code == 64);
}

TEST_CASE("cli: lattice counting utilities") {
  CHECK(run_cli("lattice-count --n 2 --k 5").out == "20\n");
  CHECK(run_cli("lattice-count --n 2 --k 5 --orthant").out == "6\n");
  CHECK(run_cli("lattice-count --n 2 --k 5 --ball").out == "61\n");
  const auto both = run_cli("lattice-count --n 2 --k 5 --orthant --ball");
  CHECK(both.code == 64);
}

TEST_CASE("cli: trig decomposition prints multipliers and residual") {
  const auto r = run_cli("trig-decomp --b 1,1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Q1 = cos(x2); Q2 = cos(x1)"));
  CHECK(contains(r.out, "residual over 1000 samples"));
}

TEST_CASE("cli: simplex helper needs a quantity to print") {
  const auto r = run_cli("simplex --n 3 --a 1 --volume");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "0.16666666666666666"));
  CHECK(run_cli("simplex --n 3 --a 1").code == 64);
}

TEST_CASE("cli: malformed invocations exit with the usage code") {
  CHECK(run_cli("bogus-subcommand").code == 64);
  CHECK(run_cli("").code == 64);
  CHECK(run_cli("verify-criterion --t notanumber --s 1").code == 64);
  CHECK(run_cli("verify-criterion --t pi/2 --s 1 --p 0.3").code == 64);
  CHECK(run_cli("verify-criterion --t pi/2 --s 1 --delta 2.0").code == 64);
  CHECK(run_cli("counterexample --kind nosuchkind").code == 64);
}

TEST_CASE("cli: help exits cleanly and documents the exit codes") {
  const auto r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Exit codes"));
}
