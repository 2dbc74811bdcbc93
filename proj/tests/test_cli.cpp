#include <cstdio>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "savkit/cli.hpp"

namespace {

constexpr const char* kDoc = "candidates: a b c\na\na b\nb c\n";

struct CliOutcome {
  int status;
  std::string out;
  std::string err;
};

CliOutcome run_cli(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = savkit::cli::run(std::move(args), in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("winners reads stdin and prints machine records") {
  const auto r = run_cli({"winners", "--rule", "sav", "--k", "1", "--format", "machine"}, kDoc);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "rule=sav\nk=1\nscore_num=3\nscore_den=2\ntruncated=false\ncommittee=a\n");
  CHECK(r.err.empty());
}

TEST_CASE("winners text output") {
  const auto r = run_cli({"winners", "--rule", "msav", "--k", "2"}, kDoc);
  CHECK(r.status == 0);
  CHECK(r.out == "rule: msav\nk: 2\nscore: 5/2 (approx 2.50000)\ncommittee: a b\n");
}

TEST_CASE("winners enumerates ties when asked") {
  const auto r = run_cli({"winners", "--rule", "av", "--k", "1", "--ties", "all",
                          "--format", "machine"},
                         kDoc);
  CHECK(r.status == 0);
  CHECK(r.out.find("committee=a\ncommittee=b\n") != std::string::npos);

  const auto capped = run_cli({"winners", "--rule", "av", "--k", "1", "--ties", "all",
                               "--max-enumerate", "1", "--format", "machine"},
                              kDoc);
  CHECK(capped.out.find("truncated=true") != std::string::npos);
}

TEST_CASE("any-size SAV reports the full roster") {
  const auto r = run_cli({"winners", "--rule", "sav", "--any-size", "--format", "machine"}, kDoc);
  CHECK(r.status == 0);
  CHECK(r.out.find("k=3\n") != std::string::npos);
  CHECK(r.out.find("score_num=3\nscore_den=1\n") != std::string::npos);
  CHECK(r.out.find("committee=a,b,c\n") != std::string::npos);
}

TEST_CASE("oversized k fails with a size error naming k and m") {
  const auto r = run_cli({"winners", "--rule", "sav", "--k", "5"}, kDoc);
  CHECK(r.status == 1);
  CHECK(r.err.find("k=5") != std::string::npos);
  CHECK(r.err.find("3") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors exit with status 1") {
  CHECK(run_cli({"winners", "--rule", "sav"}, kDoc).status == 1);  // no size
  CHECK(run_cli({"winners", "--rule", "sav", "--k", "1", "--any-size"}, kDoc).status == 1);
  CHECK(run_cli({"winners", "--rule", "nope", "--k", "1"}, kDoc).status == 1);
  CHECK(run_cli({"frobnicate"}, kDoc).status == 1);
  CHECK(run_cli({}, kDoc).status == 1);
  const auto parse = run_cli({"winners", "--rule", "sav", "--k", "1"}, "candidates: a a\na\n");
  CHECK(parse.status == 1);
  CHECK(parse.err.find("line 1") != std::string::npos);
}

TEST_CASE("help exits with status 0") {
  CHECK(run_cli({"--help"}).status == 0);
  CHECK(run_cli({"winners", "--help"}).status == 0);
}

TEST_CASE("score prints the table in selection order") {
  const auto r = run_cli({"score", "--rule", "sav", "--k", "1"}, kDoc);
  CHECK(r.status == 0);
  CHECK(r.out == "a 3/2\nb 1\nc 1/2\n");
}

TEST_CASE("score evaluates explicit committees") {
  const auto r = run_cli({"score", "--rule", "sav", "--committee", "a,b"}, kDoc);
  CHECK(r.status == 0);
  CHECK(r.out == "5/2\n");

  const auto unknown = run_cli({"score", "--rule", "sav", "--committee", "a,z"}, kDoc);
  CHECK(unknown.status == 1);
  CHECK(unknown.err.find("unknown candidate") != std::string::npos);
}

TEST_CASE("check agrees with the oracle and exits 0") {
  for (const char* rule : {"av", "sav", "csav", "msav"}) {
    const auto fixed = run_cli({"check", "--rule", rule, "--k", "2"}, kDoc);
    CHECK(fixed.status == 0);
    CHECK(fixed.out.find("check ok") != std::string::npos);
    const auto any = run_cli({"check", "--rule", rule, "--any-size"}, kDoc);
    CHECK(any.status == 0);
  }
}

TEST_CASE("check exits 2 on an injected discrepancy") {
  const auto r = run_cli({"check", "--rule", "av", "--k", "1", "--corrupt-av"}, kDoc);
  CHECK(r.status == 2);
  CHECK(r.out.find("check FAILED") != std::string::npos);
  CHECK(r.out.find("oracle") != std::string::npos);
}

TEST_CASE("check refuses oversized instances with status 1") {
  std::string doc = "candidates:";
  for (int i = 0; i < 25; ++i) doc += " c" + std::to_string(i);
  doc += "\nc0 c1\n";
  const auto r = run_cli({"check", "--rule", "av", "--k", "1"}, doc);
  CHECK(r.status == 1);
  CHECK(r.err.find("m <= 20") != std::string::npos);
}

TEST_CASE("gen emits a parseable, deterministic document") {
  const auto a = run_cli({"gen", "--m", "4", "--n", "6", "--p", "0.5", "--seed", "7"});
  const auto b = run_cli({"gen", "--m", "4", "--n", "6", "--p", "0.5", "--seed", "7"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  const savkit::Profile p = savkit::parse_profile(a.out);
  CHECK(p.num_candidates() == 4);
  CHECK(p.num_ballots() == 6);

  CHECK(run_cli({"gen", "--m", "4", "--n", "6", "--p", "1.5", "--seed", "7"}).status == 1);
}

TEST_CASE("gen output pipes into winners") {
  const auto doc = run_cli({"gen", "--m", "5", "--n", "9", "--p", "0.4", "--seed", "3"});
  const auto r = run_cli({"winners", "--rule", "csav", "--any-size", "--format", "machine"},
                         doc.out);
  CHECK(r.status == 0);
  CHECK(r.out.find("rule=csav") != std::string::npos);
}

TEST_CASE("input can come from a file argument") {
  const std::string path = "cli_input_fixture.txt";
  {
    std::ofstream f(path);
    f << kDoc;
  }
  const auto r = run_cli({"winners", "--rule", "sav", "--k", "1", "--format",
                          "machine", path});
  CHECK(r.status == 0);
  CHECK(r.out.find("committee=a\n") != std::string::npos);
  std::remove(path.c_str());

  const auto missing = run_cli({"winners", "--rule", "sav", "--k", "1", "no_such_file.txt"});
  CHECK(missing.status == 1);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("machine output is byte-stable across invocations") {
  const std::vector<std::string> args = {"winners", "--rule", "msav", "--any-size",
                                         "--ties", "all", "--format", "machine"};
  const auto a = run_cli(args, kDoc);
  const auto b = run_cli(args, kDoc);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}
