#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frucht/errors.hpp"

namespace frucht::cli {

enum class Command { build, verify, gadget, codec, decode, suite };

struct RunConfig {
  Command command = Command::verify;
  std::string group_spec;        // catalog name, e.g. "cyclic:4"
  std::string cayley_file;       // path to {"order": n, "table": [[..]]}
  std::string export_format = "edgelist";  // edgelist | dot | json
  std::string out;               // output path; empty = stdout
  std::uint64_t budget = 10'000'000;
  int samples = 100;
  int max_order = 8;
  std::string gadget_bits;       // gadget: code as 0/1 string
  bool check_rigidity = false;
  std::string perm_file;         // decode: JSON list of [from, to] pairs
  // codec operations (each optional, evaluated in this order)
  std::optional<std::string> pair_arg;     // "m,n"
  std::optional<std::uint64_t> unpair_arg;
  std::optional<std::string> xi_arg;       // rational "p/q"
  std::optional<std::uint64_t> xi_index;
  std::optional<std::uint64_t> xi_depth;
  bool words = false;            // codec: print the group's code words
  std::uint64_t seed = 0x5eed5eedULL;  // FRUCHT_SEED overrides
};

// Thrown (and caught in run) when --help is requested: not an error.
struct HelpRequested {
  std::string text;
};

RunConfig parse_args(const std::vector<std::string>& args);

// Runs the configured command, writing primary output to `out`.
// Returns the process exit status.
int execute(const RunConfig& config, std::ostream& out);

// execute with every Error mapped to its exit code (message on stderr).
int safe_execute(const RunConfig& config, std::ostream& out,
                 std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace frucht::cli
