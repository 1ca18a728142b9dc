#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ledgerkit/cli.hpp"

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ledgerkit::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) {
  return std::string(LEDGERKIT_CORPUS_DIR) + "/" + name;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("cost eval prints the cost") {
  const RunResult r = run_cli({"cost", "eval", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "J=0.25\n");
  CHECK(r.err.empty());

  CHECK(run_cli({"cost", "eval", "1"}).out == "J=0\n");
  CHECK(run_cli({"cost", "eval", "4"}).out == "J=1.125\n");

  const RunResult bad = run_cli({"cost", "eval", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(bad.out.empty());
}

TEST_CASE("cost check reports the scan and a verdict") {
  const RunResult r = run_cli({"cost", "check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reciprocity_max=") != std::string::npos);
  CHECK(r.out.find("cost_min=") != std::string::npos);
  CHECK(r.out.find("composition_residual_max=") != std::string::npos);
  CHECK(r.out.find("pass=true\n") != std::string::npos);

  const RunResult narrow = run_cli({"cost", "check", "--grid", "16", "--lo", "0.5", "--hi", "2"});
  CHECK(narrow.code == 0);

  CHECK(run_cli({"cost", "check", "--grid", "1"}).code == 2);   // grid too small
  CHECK(run_cli({"cost", "check", "--lo", "-3"}).code == 2);
}

TEST_CASE("ledger replay prints final balances") {
  const RunResult r = run_cli({"ledger", "replay", corpus("example3.trace")});
  CHECK(r.code == 0);
  CHECK(r.out == "a=-5\nb=1\nc=7\nd=-3\n");

  const RunResult one = run_cli({"ledger", "replay", corpus("example1.trace")});
  CHECK(one.code == 0);
  CHECK(one.out == "a=-1\nb=1\nc=0\nd=0\n");
}

TEST_CASE("ledger replay strict unit mode") {
  const RunResult ok = run_cli({"ledger", "replay", corpus("example1.trace"), "--strict-unit"});
  CHECK(ok.code == 0);

  const RunResult bad = run_cli({"ledger", "replay", corpus("example2.trace"), "--strict-unit"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("violation:") != std::string::npos);
  CHECK(bad.err.find("tick 3") != std::string::npos);
}

TEST_CASE("flows verify judges cycle closure") {
  const RunResult closed = run_cli({"flows", "verify", corpus("example3.trace")});
  CHECK(closed.code == 0);
  CHECK(closed.out == "closed=true\n");

  const RunResult open = run_cli({"flows", "verify", corpus("example2.trace")});
  CHECK(open.code == 1);
  CHECK(open.out ==
        "closed=false\n"
        "cycle=b->c->a->b flux=3\n"
        "cycle=c->d->a->c flux=-3\n");

  // A window over the first four ticks of the long example is the short one.
  const RunResult windowed =
      run_cli({"flows", "verify", corpus("example3.trace"), "--t0", "0", "--window", "4"});
  CHECK(windowed.code == 1);
  CHECK(windowed.out == open.out);

  // The final empty tick alone clears trivially.
  const RunResult tail =
      run_cli({"flows", "verify", corpus("example3.trace"), "--t0", "7", "--window", "1"});
  CHECK(tail.code == 0);

  CHECK(run_cli({"flows", "verify", corpus("example3.trace"), "--window", "9"}).code == 2);
}

TEST_CASE("potential solve prints node potentials or the violated cycle") {
  const RunResult ok = run_cli({"potential", "solve", corpus("example3.trace")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "a=0\nb=2\nc=3\nd=0\n");

  const RunResult bad = run_cli({"potential", "solve", corpus("example3_bad.trace")});
  CHECK(bad.code == 1);
  CHECK(bad.out ==
        "closed=false\n"
        "cycle=b->c->a->b\n"
        "flux=-1\n");

  // A lone posting does not clear either: the basis cycle through the hub
  // picks up the stray unit.
  const RunResult lone = run_cli({"potential", "solve", corpus("example1.trace")});
  CHECK(lone.code == 1);
  CHECK(lone.out.find("closed=false\n") == 0);
}

TEST_CASE("schedule gray prints the walk file") {
  const RunResult r = run_cli({"schedule", "gray", "--dim", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "# d=3\n000\n001\n011\n010\n110\n111\n101\n100\n");

  CHECK(run_cli({"schedule", "gray", "--dim", "0"}).code == 2);
  CHECK(run_cli({"schedule", "gray", "--dim", "25"}).code == 2);
  CHECK(run_cli({"schedule", "gray"}).code == 2);  // --dim is required
}

TEST_CASE("schedule validate reports the three constraints") {
  const RunResult r = run_cli({"schedule", "validate", corpus("gray3.walk"), "--cyclic"});
  CHECK(r.code == 0);
  CHECK(r.out == "atomic=true\ncomplete=true\nunique=true\nperiod=8\n");

  const auto bad = write_temp("ledgerkit_cli_bad.walk", "00\n11\n");
  const RunResult broken = run_cli({"schedule", "validate", bad.string()});
  CHECK(broken.code == 1);
  CHECK(broken.out == "atomic=false\ncomplete=false\nunique=true\nperiod=2\n");
  std::filesystem::remove(bad);
}

TEST_CASE("schedule dims prints one row per dimension") {
  const RunResult r = run_cli({"schedule", "dims", "--max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "d=1 lcm=90 gap45=false closed_form_lcm=360 closed_form_matches=false\n"
        "d=2 lcm=180 gap45=false closed_form_lcm=360 closed_form_matches=false\n"
        "d=3 lcm=360 gap45=true closed_form_lcm=360 closed_form_matches=true\n");

  const RunResult linked = run_cli({"schedule", "dims", "--max", "4", "--assume-linking"});
  CHECK(linked.code == 0);
  CHECK(linked.out.find("d=3 lcm=360 gap45=true closed_form_lcm=360 "
                        "closed_form_matches=true survives=true\n") != std::string::npos);
  CHECK(linked.out.find("d=4 lcm=720 gap45=false closed_form_lcm=720 "
                        "closed_form_matches=true survives=false\n") != std::string::npos);

  CHECK(run_cli({"schedule", "dims", "--max", "30"}).code == 2);
}

TEST_CASE("usage and file errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"cost"}).code == 2);  // a leaf subcommand is required
  CHECK(run_cli({"cost", "eval"}).code == 2);

  const RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);

  const RunResult missing = run_cli({"ledger", "replay", "/no/such/file.trace"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open file") != std::string::npos);

  const auto mangled = write_temp("ledgerkit_cli_bad.trace", "ledger-trace v1\nnode a\n");
  const RunResult parse_fail = run_cli({"ledger", "replay", mangled.string()});
  CHECK(parse_fail.code == 2);
  CHECK(parse_fail.err.find("parse error at line 3, column 1 [missing_delta]") !=
        std::string::npos);
  std::filesystem::remove(mangled);
}
