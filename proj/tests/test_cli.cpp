#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nsring/cli.hpp"
#include "nsring/json_io.hpp"
#include "nsring/rng.hpp"
#include "nsring/sweeps.hpp"

using namespace nsring;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json parse_out(const std::string& text) { return json::parse(text); }

} // namespace

TEST_CASE("analyze command") {
  auto r = run({"analyze", "4,5,11", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r.out);
  CHECK(j["generators"] == json::array({4, 5, 11}));
  CHECK(j["frobenius"] == 7);
  CHECK(j["gorenstein"] == false);
  CHECK(j["gap_count"] == 5);
  CHECK(j["mult"] == 4);
  CHECK(j["edim"] == 3);

  auto r2 = run({"analyze", "2,3,4", "--format", "json"});
  REQUIRE(r2.code == 0);
  json j2 = parse_out(r2.out);
  CHECK(j2["generators"] == json::array({2, 3}));
  CHECK(j2["removed_redundant"] == json::array({4}));

  auto r3 = run({"analyze", "6,10"});
  CHECK(r3.code == 2);
  json diag = parse_out(r3.err);
  CHECK(diag["error"]["code"] == "GcdNotOne");

  auto r4 = run({"analyze", "4,5,11", "--format", "csv"});
  CHECK(r4.code == 0);
  CHECK(r4.out.find("generators,") == 0);
}

TEST_CASE("index command") {
  auto r = run({"index", "8,27,45", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r.out);
  CHECK(j["index"] == 6);
  CHECK(j["ding_gap"] == 1);
  CHECK(j["method"] == "ci3-formula");
  CHECK(j["n_values"]["27"] == 11);
  // exactly the documented keys
  CHECK(j.size() == 9);

  auto r2 = run({"index", "4,5,11", "--method", "ord-formula"});
  CHECK(r2.code == 3);
  CHECK(parse_out(r2.err)["error"]["code"] == "NotGorenstein");

  auto r3 = run({"index", "2,3"});
  REQUIRE(r3.code == 0);
  CHECK(r3.out.find("index: 2") != std::string::npos);
  CHECK(r3.out.find("hypersurface") != std::string::npos);

  auto r4 = run({"index", "4,5,11", "--method", "direct", "--format", "json"});
  REQUIRE(r4.code == 0);
  CHECK(parse_out(r4.out)["index"] == 3);
  CHECK(parse_out(r4.out)["gorenstein"] == false);
}

TEST_CASE("ci3 command") {
  auto r = run({"ci3", "4,10,15", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r.out);
  CHECK(j["structures"].size() == 2);
  CHECK(j["frobenius"] == 21);
  CHECK(j["report"]["index"] == 3);
  CHECK(j["structures"][0]["roles"]["a"] == 4);
  CHECK(j["structures"][0]["p"] == 5);

  CHECK(run({"ci3", "2,3"}).code == 3);
  CHECK(run({"ci3", "4,5,11"}).code == 3);
  CHECK(parse_out(run({"ci3", "4,5,11"}).err)["error"]["code"] == "NotCiEdim3");
}

TEST_CASE("glue command") {
  auto r = run({"glue", "--base", "2,3", "--a", "4", "--p", "5", "--format",
                "json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r.out);
  CHECK(j["generators"] == json::array({4, 10, 15}));
  CHECK(j["frobenius"] == 21);

  auto r2 = run({"glue", "--base", "2,3", "--a", "2", "--p", "5"});
  CHECK(r2.code == 2);
  CHECK(parse_out(r2.err)["error"]["code"] == "InvalidGluing");
}

TEST_CASE("family command streams JSON lines") {
  auto r = run({"family", "--kind", "hna", "--n", "1..3", "--a", "1..3",
                "--format", "json"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    json row = json::parse(line);
    ++count;
    CHECK(row["report"]["index"] == row["expected_index"]);
    CHECK(row["report"]["ding_gap"] == row["expected_ding_gap"]);
  }
  CHECK(count == 6); // n in {1,2,3} x a in {1,3}

  auto r2 = run({"family", "--kind", "ding3", "--n", "2..4", "--format",
                 "json"});
  REQUIRE(r2.code == 0);
  std::istringstream lines2(r2.out);
  count = 0;
  while (std::getline(lines2, line)) {
    json row = json::parse(line);
    ++count;
    CHECK(row["report"]["method"] == "ci3-formula");
    CHECK(row["report"]["index"] == row["expected_index"]);
  }
  CHECK(count == 3);

  CHECK(run({"family", "--kind", "hna"}).code == 2); // missing --n
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--suite", "main-theorem", "--count", "25",
                "--format", "json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r.out);
  CHECK(j[0]["name"] == "main-theorem");
  CHECK(j[0]["total"] == 25);
  CHECK(j[0]["failed"] == 0);

  auto r2 = run({"verify", "--suite", "hypersurface", "--pairs", "8"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("hypersurface: 8/8 ok") != std::string::npos);
}

TEST_CASE("verify reports injected faults") {
  auto r = run({"verify", "--suite", "main-theorem", "--count", "10",
                "--inject-fault", "n-formula-b"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("first counterexample") != std::string::npos);

  // the sweep itself reports the first mismatch deterministically
  SweepOptions opts;
  opts.fault = Fault::n_formula_b_off_by_one;
  auto sw = sweep_main_theorem(10, opts);
  CHECK(sw.failed == 10);
  CHECK_FALSE(sw.first_counterexample.is_null());
  CHECK(sw.first_counterexample.contains("generator"));
}

TEST_CASE("paper-examples reproduces every documented claim") {
  auto r = run({"paper-examples", "--format", "json"});
  REQUIRE(r.code == 0);
  json rows = parse_out(r.out);
  CHECK(rows.size() >= 20);
  for (const auto& row : rows) {
    CAPTURE(row["claim"].get<std::string>());
    CHECK(row["match"] == true);
  }
}

TEST_CASE("output is byte-identical across runs") {
  for (auto args : {std::vector<std::string>{"index", "8,27,45", "--format",
                                             "json"},
                    {"verify", "--suite", "shen-bryant", "--chains", "5",
                     "--format", "json"},
                    {"family", "--kind", "hna", "--n", "1..4", "--a", "1..9",
                     "--format", "json"},
                    {"paper-examples", "--format", "json"}}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  // job count must not change the bytes either
  auto one = run({"verify", "--suite", "main-theorem", "--count", "12",
                  "--jobs", "1", "--format", "json"});
  auto four = run({"verify", "--suite", "main-theorem", "--count", "12",
                   "--jobs", "4", "--format", "json"});
  CHECK(one.out == four.out);
}

TEST_CASE("size cap environment variable") {
  setenv("NSRING_MAX_FROBENIUS", "100", 1);
  auto r = run({"analyze", "2001,2012"});
  unsetenv("NSRING_MAX_FROBENIUS");
  CHECK(r.code == 4);
  CHECK(parse_out(r.err)["error"]["code"] == "TooLarge");

  auto r2 = run({"analyze", "2001,2012", "--max-frobenius", "5000000"});
  CHECK(r2.code == 0);
}

TEST_CASE("kernel flag") {
  auto r = run({"index", "4,7,10", "--kernel", "scalar", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(parse_out(r.out)["index"] == 3);
  run({"--kernel", "auto", "analyze", "2,3"}); // restore the default
}

TEST_CASE("file inputs") {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
  };
  write("/tmp/nsring_gens.json", "[8, 27, 45]");
  auto r = run({"index", "--file", "/tmp/nsring_gens.json", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(parse_out(r.out)["index"] == 6);

  write("/tmp/nsring_step.json", R"({"base": [2, 3], "a": 4, "p": 5})");
  auto r2 = run({"glue", "--file", "/tmp/nsring_step.json", "--format", "json"});
  REQUIRE(r2.code == 0);
  CHECK(parse_out(r2.out)["generators"] == json::array({4, 10, 15}));

  write("/tmp/nsring_fam.json", R"({"kind": "watanabe-hna", "n": 2, "a": 3})");
  auto r3 = run({"family", "--file", "/tmp/nsring_fam.json", "--format", "json"});
  REQUIRE(r3.code == 0);
  CHECK(parse_out(r3.out)["generators"] == json::array({4, 7, 10}));

  write("/tmp/nsring_bad.json", "{not json");
  CHECK(run({"index", "--file", "/tmp/nsring_bad.json"}).code == 2);
  CHECK(run({"index", "--file", "/tmp/nsring_missing.json"}).code == 2);
}

TEST_CASE("overflow and method-specific exit codes") {
  auto r = run({"analyze", "3000000000,7"});
  CHECK(r.code == 2);
  CHECK(parse_out(r.err)["error"]["code"] == "Overflow");

  auto r2 = run({"index", "2,3", "--method", "ci3"});
  CHECK(r2.code == 3);
  CHECK(parse_out(r2.err)["error"]["code"] == "WrongEdim");

  auto r3 = run({"index", "4,5,11", "--method", "ci3"});
  CHECK(r3.code == 3);
  CHECK(parse_out(r3.err)["error"]["code"] == "NotCiEdim3");
}

TEST_CASE("verify csv format") {
  auto r = run({"verify", "--suite", "ding-family", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("name,total,failed") == 0);
  CHECK(r.out.find("ding-family,5,0") != std::string::npos);
}

TEST_CASE("help and parse errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"index"}).code == 2);                   // no generators
  CHECK(run({"index", "4,x,11"}).code == 2);         // bad number
  CHECK(run({"analyze", "4,5,11", "--format", "yaml"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("fuzz: random argument vectors never escape the exit contract") {
  Rng rng(0xf22dull);
  const std::vector<std::string> vocab = {
      "analyze", "index", "ci3", "glue", "family",
      "--format", "json", "csv", "human", "--method", "apery", "direct",
      "ord-formula", "ci3", "--kind", "hna", "ding3", "--n", "--a", "--p",
      "--base", "--file", "--jobs", "--seed", "--kernel", "scalar",
      "--max-frobenius", "--max-generator", "4,5,11", "2,3", "4,10,15",
      "6,10", "0", "1", "2", "-7", "17", "2..5", "1..9", "abc", "",
      "--", "-", "=", "999983", ",,,", "4,,5", "1e9", "0x10", " ",
      "\t", "druid", "--count"};
  for (int iter = 0; iter < 10'000; ++iter) {
    int n = static_cast<int>(rng.uniform(0, 6));
    std::vector<std::string> args;
    for (int i = 0; i < n; ++i)
      args.push_back(vocab[static_cast<size_t>(
          rng.uniform(0, static_cast<int64_t>(vocab.size()) - 1))]);
    std::ostringstream out, err;
    int code = 99;
    REQUIRE_NOTHROW(code = run_cli(args, out, err));
    CAPTURE(args);
    CHECK(code >= 0);
    CHECK(code <= 4);
  }
}
