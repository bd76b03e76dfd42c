#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frucht/aut.hpp"
#include "frucht/cli.hpp"
#include "frucht/errors.hpp"
#include "frucht/main_graph.hpp"

using namespace frucht;
using frucht::cli::Command;
using frucht::cli::HelpRequested;
using frucht::cli::RunConfig;
using frucht::cli::parse_args;
using frucht::cli::safe_execute;
using nlohmann::json;

namespace {

struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path, std::ios::binary) << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  const RunConfig config = parse_args(args);
  std::ostringstream out, err;
  const int code = safe_execute(config, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (const char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("argument parsing fills the config") {
  const RunConfig v = parse_args({"verify", "--group", "cyclic:4"});
  CHECK(v.command == Command::verify);
  CHECK(v.group_spec == "cyclic:4");
  CHECK(v.budget == 10'000'000);
  CHECK(v.samples == 100);

  const RunConfig b = parse_args({"build", "--group", "dihedral:4",
                                  "--export-format", "dot", "--out",
                                  "graph.dot"});
  CHECK(b.command == Command::build);
  CHECK(b.group_spec == "dihedral:4");
  CHECK(b.export_format == "dot");
  CHECK(b.out == "graph.dot");

  const RunConfig s =
      parse_args({"suite", "--max-order", "4", "--samples", "7"});
  CHECK(s.command == Command::suite);
  CHECK(s.max_order == 4);
  CHECK(s.samples == 7);

  const RunConfig g = parse_args({"gadget", "--bits", "010"});
  CHECK(g.command == Command::gadget);
  CHECK(g.gadget_bits == "010");
  CHECK_FALSE(g.check_rigidity);

  const RunConfig c = parse_args({"codec", "--pair", "3,5"});
  CHECK(c.command == Command::codec);
  REQUIRE(c.pair_arg.has_value());
  CHECK(*c.pair_arg == "3,5");
}

TEST_CASE("malformed command lines are usage errors") {
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"transmogrify"}), UsageError);
  CHECK_THROWS_AS(parse_args({"verify"}), UsageError);  // no group source
  CHECK_THROWS_AS(parse_args({"build"}), UsageError);
  CHECK_THROWS_AS(parse_args({"decode", "--group", "cyclic:2"}), UsageError);
  CHECK_THROWS_AS(parse_args({"verify", "--group", "cyclic:2", "--frob"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"build", "--group", "cyclic:2",
                              "--export-format", "yaml"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"verify", "--group", "cyclic:2", "--budget",
                              "0"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"gadget"}), UsageError);  // --bits required
  CHECK_THROWS_AS(parse_args({"verify", "--group", "cyclic:2",
                              "--cayley-file", "t.json"}),
                  UsageError);
}

TEST_CASE("seed environment variable overrides the default") {
  unsetenv("FRUCHT_SEED");
  CHECK(parse_args({"suite"}).seed == 0x5eed5eedULL);
  setenv("FRUCHT_SEED", "42", 1);
  CHECK(parse_args({"suite"}).seed == 42);
  setenv("FRUCHT_SEED", "banana", 1);
  CHECK_THROWS_AS(parse_args({"suite"}), UsageError);
  unsetenv("FRUCHT_SEED");
}

TEST_CASE("help is surfaced, not thrown as an error") {
  try {
    parse_args({"--help"});
    FAIL("expected HelpRequested");
  } catch (const HelpRequested& h) {
    CHECK(h.text.find("Exit codes") != std::string::npos);
    CHECK(h.text.find("verify") != std::string::npos);
  }
  try {
    parse_args({"verify", "--help"});
    FAIL("expected HelpRequested");
  } catch (const HelpRequested& h) {
    CHECK(h.text.find("--budget") != std::string::npos);
  }
}

TEST_CASE("verify emits a full report and exit status") {
  const RunResult r = run_cli({"verify", "--group", "cyclic:2"});
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["group"] == "cyclic:2");
  CHECK(report["order"] == 2);
  CHECK(report["vertex_count"] == 24);
  CHECK(report["edge_count"] == 24);
  CHECK(report["aut_count"] == 2);
  CHECK(report["is_isomorphic"] == true);
  CHECK(report["homomorphism_ok"] == true);
  CHECK(report["decode_ok"] == true);
  CHECK(report["ok"] == true);
  CHECK(report["first_failure"] == "");
  CHECK(report["elapsed_ms"].is_number());

  // Determinism modulo the timing field.
  json a = json::parse(run_cli({"verify", "--group", "cyclic:2"}).out);
  json b = json::parse(run_cli({"verify", "--group", "cyclic:2"}).out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("execution errors map to documented exit codes") {
  CHECK(run_cli({"verify", "--group", "nope:3"}).exit_code == 6);
  CHECK(run_cli({"verify", "--group", "cyclic:129"}).exit_code == 7);
  const RunResult r = run_cli({"verify", "--group", "nope:3"});
  CHECK(r.out.empty());
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("build exports are deterministic") {
  const RunResult first = run_cli({"build", "--group", "cyclic:2"});
  const RunResult second = run_cli({"build", "--group", "cyclic:2"});
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  // 24 edge lines plus the trailing manifest line.
  CHECK(count_lines(first.out) == 25);
  const auto last_nl = first.out.find_last_of('\n', first.out.size() - 2);
  const json m = json::parse(first.out.substr(last_nl + 1));
  CHECK(m["group"] == "cyclic:2");
  CHECK(m["vertex_count"] == 24);
  CHECK(m["edge_count"] == 24);
  CHECK(m["code_length"] == 2);
  CHECK(m["k_max"] == 10);
}

TEST_CASE("build writes json exports to a file") {
  const std::string out_path =
      (std::filesystem::temp_directory_path() / "frucht_cli_build.json")
          .string();
  const RunResult r = run_cli({"build", "--group", "cyclic:2",
                               "--export-format", "json", "--out", out_path});
  CHECK(r.exit_code == 0);
  // Stdout then carries only the manifest.
  CHECK(count_lines(r.out) == 1);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  const json doc = json::parse(in);
  CHECK(doc["vertex_count"] == 24);
  CHECK(doc["vertices"].size() == 24);
  CHECK(doc["edges"].size() == 24);
  CHECK(doc["vertices"][0] == "0,0,0");
  std::filesystem::remove(out_path);

  const RunResult bad = run_cli({"build", "--group", "cyclic:2", "--out",
                                 "/nonexistent-dir/x.txt"});
  CHECK(bad.exit_code == 16);
}

TEST_CASE("gadget export and rigidity verdict") {
  const RunResult r =
      run_cli({"gadget", "--bits", "10", "--check-rigidity"});
  CHECK(r.exit_code == 0);
  const std::string edges = "2 3\n3 4\n4 5\n4 6\n6 7\n7 8\n";
  REQUIRE(r.out.substr(0, edges.size()) == edges);
  const json verdict = json::parse(r.out.substr(edges.size()));
  CHECK(verdict["code"] == "10");
  CHECK(verdict["rigid"] == true);
  CHECK(verdict["forcing_order"] == json({2, 3, 4, 5, 6, 7, 8}));

  CHECK(run_cli({"gadget", "--bits", "11"}).exit_code == 11);
  CHECK(run_cli({"gadget", "--bits", "02"}).exit_code == 15);
}

TEST_CASE("codec operations print one json line each") {
  const RunResult pair = run_cli({"codec", "--pair", "3,5"});
  CHECK(pair.exit_code == 0);
  CHECK(json::parse(pair.out)["value"] == 41);

  const RunResult unpair = run_cli({"codec", "--unpair", "41"});
  CHECK(unpair.exit_code == 0);
  const json u = json::parse(unpair.out);
  CHECK(u["m"] == 3);
  CHECK(u["n"] == 5);

  const RunResult digits =
      run_cli({"codec", "--xi", "1/3", "--depth", "8"});
  CHECK(digits.exit_code == 0);
  CHECK(json::parse(digits.out)["digits"] == "01010101");

  const RunResult digit =
      run_cli({"codec", "--xi", "1/2", "--index", "1"});
  CHECK(digit.exit_code == 0);
  CHECK(json::parse(digit.out)["digit"] == 1);

  const RunResult both = run_cli(
      {"codec", "--xi", "1/2", "--index", "0", "--depth", "4"});
  CHECK(both.exit_code == 0);
  CHECK(count_lines(both.out) == 2);

  const RunResult words = run_cli({"codec", "--words", "--group", "trivial"});
  CHECK(words.exit_code == 0);
  CHECK(json::parse(words.out)["words"] == json({"00"}));

  CHECK(run_cli({"codec", "--xi", "3/2", "--index", "0"}).exit_code == 9);
  CHECK(run_cli({"codec", "--xi", "1/3"}).exit_code == 2);
  CHECK(run_cli({"codec", "--depth", "4"}).exit_code == 2);
  CHECK(run_cli({"codec"}).exit_code == 2);
  CHECK(run_cli({"codec", "--pair", "35"}).exit_code == 2);
}

TEST_CASE("decode recovers the element from a permutation file") {
  const FiniteGroup group = catalog("cyclic:3");
  const FiniteGraph graph = materialize(group, finite_psi(group));
  const Automorphism phi = lift(graph, 2);
  json doc = json::array();
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    doc.push_back({vertex_str(graph.vertices[v]),
                   vertex_str(graph.vertices[phi.perm[v]])});
  const TempFile perm("frucht_cli_perm.json", doc.dump());

  const RunResult good =
      run_cli({"decode", "--group", "cyclic:3", "--perm-file", perm.str()});
  CHECK(good.exit_code == 0);
  const json report = json::parse(good.out);
  CHECK(report["decoded"] == 2);
  CHECK(report["consistent"] == true);

  json clash = doc;
  clash[0][1] = clash[1][1];  // two sources, one target
  const TempFile bad("frucht_cli_perm_bad.json", clash.dump());
  CHECK(run_cli({"decode", "--group", "cyclic:3", "--perm-file",
                 bad.str()}).exit_code == 15);

  CHECK(run_cli({"decode", "--group", "cyclic:3", "--perm-file",
                 "/does/not/exist.json"}).exit_code == 16);
}

TEST_CASE("suite runs the whole battery below a cutoff") {
  const RunResult r = run_cli({"suite", "--max-order", "2", "--samples", "5"});
  CHECK(r.exit_code == 0);
  const json results = json::parse(r.out);
  REQUIRE(results.size() == 2);
  CHECK(results[0]["group"] == "trivial");
  CHECK(results[1]["group"] == "cyclic:2");
  for (const auto& entry : results) {
    CHECK(entry["ok"] == true);
    CHECK(entry["oracle_agreement"] == true);
    CHECK(entry["decode_trials"] == true);
    CHECK(entry["degree_classes"].is_null());  // orders 1 and 2
  }
  const json with_degrees =
      json::parse(run_cli({"suite", "--max-order", "3"}).out);
  REQUIRE(with_degrees.size() == 3);
  CHECK(with_degrees[2]["group"] == "cyclic:3");
  CHECK(with_degrees[2]["degree_classes"] == true);
}

TEST_CASE("cayley files feed every group-taking command") {
  const TempFile z2("frucht_cli_z2.json",
                    R"({"order": 2, "table": [[0, 1], [1, 0]]})");
  const RunResult ok = run_cli({"verify", "--cayley-file", z2.str()});
  CHECK(ok.exit_code == 0);
  const json report = json::parse(ok.out);
  CHECK(report["group"] == "custom");
  CHECK(report["order"] == 2);
  CHECK(report["aut_count"] == 2);

  const TempFile wrong_order("frucht_cli_warp.json",
                             R"({"order": 3, "table": [[0, 1], [1, 0]]})");
  CHECK(run_cli({"verify", "--cayley-file", wrong_order.str()}).exit_code ==
        15);

  const TempFile not_latin("frucht_cli_latin.json",
                           R"({"order": 2, "table": [[0, 1], [0, 1]]})");
  CHECK(run_cli({"verify", "--cayley-file", not_latin.str()}).exit_code == 3);

  const TempFile junk("frucht_cli_junk.json", "not json at all {");
  CHECK(run_cli({"verify", "--cayley-file", junk.str()}).exit_code == 15);

  CHECK(run_cli({"verify", "--cayley-file", "/does/not/exist.json"})
            .exit_code == 16);
}

}  // TEST_SUITE
