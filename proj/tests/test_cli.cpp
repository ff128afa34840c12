#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "helpers.hpp"
#include "khr/cli.hpp"
#include "khr/constructions.hpp"

using namespace khr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check") {
  auto h3 = run({"check", test::data_path("H3.khr")});
  CHECK(h3.code == kExitOk);
  CHECK(h3.out == "PASS (canonical hypergroup: 5/5 axioms; Krasner: 4/4)\n");

  auto mut = run({"check", test::data_path("Z6_mutated.khr")});
  CHECK(mut.code == kExitFailed);
  CHECK(has(mut.out, "FAIL"));
  CHECK(has(mut.out, "C2-commutative"));
  CHECK(has(mut.out, "(2,3)"));

  auto chain = run({"check", test::data_path("chain3.khr")});
  CHECK(chain.code == kExitFailed);
  CHECK(has(chain.out, "K3-distributive"));
  CHECK(has(chain.out, "(a,a,1)"));

  auto broken = run({"check", test::data_path("broken.khr")});
  CHECK(broken.code == kExitInput);
  CHECK(has(broken.err, "7:11"));

  CHECK(run({"check", "/nonexistent.khr"}).code == kExitInput);
}

TEST_CASE("classify") {
  auto z6 = run({"classify", test::data_path("Z6.khr"), "--ideal", "{0,2,4}"});
  CHECK(z6.code == kExitOk);
  CHECK(has(z6.out, "r-hyperideal: YES\n"));

  auto chain = run({"classify", test::data_path("chain3.khr"), "--ideal", "{0,a}"});
  CHECK(chain.code == kExitOk);
  CHECK(has(chain.err, "warning"));
  CHECK(has(chain.out, "r-hyperideal: NO, witness a*1 = a in N, ann(a)=0, 1 not in N"));

  auto all = run({"classify", test::data_path("Z6.khr"), "--all"});
  CHECK(has(all.out, "hyperideals (4):"));
  CHECK(has(all.out, "{0} < {0,3}"));

  auto phi = run({"classify", test::data_path("Z6.khr"), "--ideal", "{0,3}", "--phi", "0", "--phi", "n:2"});
  CHECK(phi.code == kExitOk);
  CHECK(has(phi.out, "phi_0"));
  CHECK(has(phi.out, "phi_2"));

  auto notideal = run({"classify", test::data_path("Z6.khr"), "--ideal", "{0,2}"});
  CHECK(notideal.code == kExitInput);
  CHECK(has(notideal.err, "not a hyperideal"));
  CHECK(notideal.out.empty());

  CHECK(run({"classify", test::data_path("Z6.khr"), "--ideal", "{0,9}"}).code == kExitInput);
  CHECK(run({"classify", test::data_path("Z6.khr"), "--ideal", "{0,3}", "--phi", "bogus"}).code == kExitInput);
}

TEST_CASE("verify") {
  auto some = run({"verify", "--theorems", "COR-1a,THM-9,PROP-4"});
  CHECK(some.code == kExitOk);
  CHECK(has(some.out, "3 theorems, 0 with unexpected outcomes"));

  auto ex3 = run({"verify", "--theorems", "EX3-CLAIM"});
  CHECK(ex3.code == kExitOk);
  CHECK(has(ex3.out, "falsified as expected; witness chain(3,min),(a,1)"));

  CHECK(run({"verify", "--theorems", "NOPE"}).code == kExitInput);
  CHECK(run({"verify", "--corpus", "/nonexistent/dir"}).code == kExitInput);

  auto files = run({"verify", "--corpus", KHR_DATA_DIR, "--theorems", "EX1,THM-3.1"});
  CHECK(files.code == kExitOk);
  CHECK(has(files.out, "(2 rings"));
}

TEST_CASE("verify jsonlines") {
  auto r = run({"verify", "--theorems", "COR-1j", "--format", "jsonlines"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int records = 0;
  bool saw_summary = false;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("theorem_id"));
    CHECK(j.contains("ring_id"));
    CHECK(j.contains("verdict"));
    if (j["ring_id"] == "*") saw_summary = true;
    ++records;
  }
  CHECK(records > 1);
  CHECK(saw_summary);
}

TEST_CASE("verify output is byte-identical across runs and thread counts") {
  auto a = run({"verify", "--theorems", "all"});
  auto b = run({"verify", "--theorems", "all"});
  auto c = run({"verify", "--theorems", "all", "--threads", "1"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("enumerate") {
  auto two = run({"enumerate", "--order", "2"});
  CHECK(two.code == kExitOk);
  CHECK(has(two.out, "# 4 hyperrings of order 2"));
  CHECK(run({"enumerate", "--order", "4"}).code == kExitInput);
  auto rnd1 = run({"enumerate", "--order", "4", "--random", "5", "3"});
  auto rnd2 = run({"enumerate", "--order", "4", "--random", "5", "3"});
  CHECK(rnd1.code == kExitOk);
  CHECK(rnd1.out == rnd2.out);
}

TEST_CASE("quotient") {
  const auto emit = (std::filesystem::temp_directory_path() / "khr_test_quotient.khr").string();
  auto q = run({"quotient", test::data_path("Z6.khr"), "--ideal", "{0,3}", "--emit", emit});
  CHECK(q.code == kExitOk);
  CHECK(has(q.out, "[1] = {1,4}"));
  auto table = parse_hyperring(test::slurp(emit));
  CHECK(isomorphic(table, build_classical_zn(3)));
  std::filesystem::remove(emit);
  CHECK(run({"quotient", test::data_path("Z6.khr"), "--ideal", "{0,2}"}).code == kExitInput);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}
