#include "frucht/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frucht/aut.hpp"
#include "frucht/codec.hpp"
#include "frucht/errors.hpp"
#include "frucht/export.hpp"
#include "frucht/gadget.hpp"
#include "frucht/groups.hpp"
#include "frucht/main_graph.hpp"
#include "frucht/rational.hpp"

namespace frucht::cli {

namespace {

constexpr const char* kExitCodeTable =
    "Exit codes:\n"
    "  0   success\n"
    "  1   a requested check failed (verify/suite/gadget/decode verdict)\n"
    "  2   usage error\n"
    "  3   Cayley table is not a Latin square\n"
    "  4   operation is not associative\n"
    "  5   table has no identity element\n"
    "  6   unknown catalog family\n"
    "  7   parameter out of range\n"
    "  8   invalid group element handle\n"
    "  9   value out of representable range\n"
    "  10  gadget vertex label below 2\n"
    "  11  code word lacks the 0 terminator\n"
    "  12  group/graph mismatch\n"
    "  13  permutation image is no translation lift\n"
    "  14  search budget exceeded\n"
    "  15  invalid input\n"
    "  16  i/o failure\n"
    "  17  internal invariant violation\n";

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
    value = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw UsageError(what + " must be a nonnegative integer, got '" + s + "'");
  }
  if (pos != s.size())
    throw UsageError(what + " must be a nonnegative integer, got '" + s + "'");
  return value;
}

FiniteGroup load_group(const RunConfig& config) {
  if (!config.group_spec.empty() && !config.cayley_file.empty())
    throw UsageError("--group and --cayley-file are mutually exclusive");
  if (!config.group_spec.empty()) return catalog(config.group_spec);
  if (config.cayley_file.empty())
    throw UsageError("missing --group or --cayley-file");
  std::ifstream in(config.cayley_file);
  if (!in) throw IoError("cannot open '" + config.cayley_file + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("cannot parse '" + config.cayley_file +
                            "' as JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    throw InvalidInputError("Cayley file must be {\"order\": n, \"table\": "
                            "[[...], ...]}");
  std::vector<std::vector<int>> table;
  try {
    table = doc["table"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInputError("\"table\" must be a square array of integers");
  }
  if (!doc["order"].is_number_integer() ||
      doc["order"].get<long long>() != static_cast<long long>(table.size()))
    throw InvalidInputError("\"order\" must equal the table dimension");
  return FiniteGroup::validate_cayley(table, "custom");
}

void write_export(const std::string& text, const RunConfig& config,
                  std::ostream& out) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw IoError("cannot open '" + config.out + "' for writing");
  file << text;
  if (!file) throw IoError("failed writing '" + config.out + "'");
}

int run_build(const RunConfig& config, std::ostream& out) {
  const FiniteGroup group = load_group(config);
  const FiniteGraph graph = materialize(group, finite_psi(group));
  std::string text;
  if (config.export_format == "edgelist")
    text = to_edge_list(graph);
  else if (config.export_format == "dot")
    text = to_dot(graph);
  else
    text = to_json(graph).dump(2) + "\n";
  write_export(text, config, out);
  out << manifest(graph).dump() << '\n';
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const FiniteGroup group = load_group(config);
  VerifyOptions opts;
  opts.max_nodes = config.budget;
  opts.decode_samples = config.samples;
  opts.seed = config.seed;
  const RealizationReport report = verify_realization(group, opts);
  out << to_json(report).dump(2) << '\n';
  return report.ok() ? 0 : 1;
}

int run_gadget(const RunConfig& config, std::ostream& out) {
  if (config.gadget_bits.empty()) throw UsageError("missing --bits");
  const GadgetGraph gadget =
      materialize_gadget(CodeWord::from_string(config.gadget_bits));
  std::string text;
  if (config.export_format == "edgelist")
    text = to_edge_list(gadget);
  else if (config.export_format == "dot")
    text = to_dot(gadget);
  else
    text = to_json(gadget).dump(2) + "\n";
  write_export(text, config, out);
  if (!config.check_rigidity) return 0;
  const bool rigid = anchored_rigidity_check(gadget);
  const auto order = anchored_forcing_order(gadget);
  nlohmann::json report{{"code", gadget.code.str()}, {"rigid", rigid}};
  report["forcing_order"] =
      order ? nlohmann::json(*order) : nlohmann::json(nullptr);
  out << report.dump() << '\n';
  return rigid ? 0 : 1;
}

int run_codec(const RunConfig& config, std::ostream& out) {
  bool did_anything = false;
  if (config.pair_arg) {
    const auto comma = config.pair_arg->find(',');
    if (comma == std::string::npos)
      throw UsageError("--pair expects \"m,n\", got '" + *config.pair_arg +
                       "'");
    const std::uint64_t m =
        parse_u64(config.pair_arg->substr(0, comma), "--pair m");
    const std::uint64_t n =
        parse_u64(config.pair_arg->substr(comma + 1), "--pair n");
    out << nlohmann::json{{"op", "pair"},
                          {"m", m},
                          {"n", n},
                          {"value", cantor_pair(m, n)}}
               .dump()
        << '\n';
    did_anything = true;
  }
  if (config.unpair_arg) {
    const auto [m, n] = cantor_unpair(*config.unpair_arg);
    out << nlohmann::json{{"op", "unpair"},
                          {"value", *config.unpair_arg},
                          {"m", m},
                          {"n", n}}
               .dump()
        << '\n';
    did_anything = true;
  }
  if (config.xi_arg) {
    const Rational x = Rational::parse(*config.xi_arg);
    if (!x.in_unit_interval())
      throw OutOfRangeError("--xi expects a rational in [0, 1], got " +
                            x.str());
    if (!config.xi_index && !config.xi_depth)
      throw UsageError("--xi needs --index and/or --depth");
    if (config.xi_index)
      out << nlohmann::json{{"op", "xi"},
                            {"x", x.str()},
                            {"index", *config.xi_index},
                            {"digit", xi_digit(x, *config.xi_index)}}
                 .dump()
          << '\n';
    if (config.xi_depth) {
      std::string digits;
      for (std::uint64_t i = 0; i < *config.xi_depth; ++i)
        digits += static_cast<char>('0' + xi_digit(x, i));
      out << nlohmann::json{
                 {"op", "xi"}, {"x", x.str()}, {"digits", digits}}
                 .dump()
          << '\n';
    }
    did_anything = true;
  } else if (config.xi_index || config.xi_depth) {
    throw UsageError("--index/--depth need --xi");
  }
  if (config.words) {
    const FiniteGroup group = load_group(config);
    nlohmann::json words = nlohmann::json::array();
    for (const CodeWord& w : finite_psi(group)) words.push_back(w.str());
    out << nlohmann::json{{"op", "words"},
                          {"group", group.name()},
                          {"words", std::move(words)}}
               .dump()
        << '\n';
    did_anything = true;
  }
  if (!did_anything)
    throw UsageError("codec needs at least one of --pair, --unpair, --xi, "
                     "--words");
  return 0;
}

int run_decode(const RunConfig& config, std::ostream& out) {
  const FiniteGroup group = load_group(config);
  const FiniteGraph graph = materialize(group, finite_psi(group));
  std::ifstream in(config.perm_file);
  if (!in) throw IoError("cannot open '" + config.perm_file + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("cannot parse '" + config.perm_file +
                            "' as JSON: " + e.what());
  }
  if (!doc.is_array())
    throw InvalidInputError(
        "permutation file must be a JSON array of [from, to] vertex pairs");
  const int m = graph.graph.num_vertices();
  Automorphism phi;
  phi.perm.assign(m, -1);
  std::vector<char> hit(m, 0);
  if (static_cast<int>(doc.size()) != m)
    throw InvalidInputError("permutation lists " + std::to_string(doc.size()) +
                            " pairs, graph has " + std::to_string(m) +
                            " vertices");
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw InvalidInputError("each entry must be [\"x,y,k\", \"x,y,k\"]");
    const int from = graph.index_of(parse_vertex(entry[0].get<std::string>()));
    const int to = graph.index_of(parse_vertex(entry[1].get<std::string>()));
    if (from < 0 || to < 0)
      throw InvalidInputError("vertex not in graph: " +
                              entry[(from < 0 ? 0 : 1)].get<std::string>());
    if (phi.perm[from] != -1)
      throw InvalidInputError("vertex mapped twice: " +
                              entry[0].get<std::string>());
    if (hit[to])
      throw InvalidInputError("vertex hit twice: " +
                              entry[1].get<std::string>());
    phi.perm[from] = to;
    hit[to] = 1;
  }
  const int element = decode(graph, phi);
  const bool consistent =
      decode_consistency(graph, phi, config.samples, config.seed);
  out << nlohmann::json{{"group", group.name()},
                        {"decoded", element},
                        {"consistent", consistent}}
             .dump()
      << '\n';
  return consistent ? 0 : 1;
}

int run_suite(const RunConfig& config, std::ostream& out) {
  const auto battery = standard_battery(config.max_order);
  nlohmann::json results = nlohmann::json::array();
  bool all_ok = true;
  for (std::size_t gi = 0; gi < battery.size(); ++gi) {
    const FiniteGroup& group = battery[gi].second;
    VerifyOptions opts;
    opts.max_nodes = config.budget;
    opts.decode_samples = config.samples;
    opts.seed = config.seed;
    const RealizationReport report = verify_realization(group, opts);
    nlohmann::json entry = to_json(report);
    entry["group"] = battery[gi].first;

    const FiniteGraph graph = materialize(group, finite_psi(group));
    const bool oracle_ok = oracle_agreement(graph, graph.context());
    entry["oracle_agreement"] = oracle_ok;
    bool degree_ok = true;
    if (group.order() >= 3) {
      degree_ok = degree_classification_matches(graph);
      entry["degree_classes"] = degree_ok;
    } else {
      entry["degree_classes"] = nullptr;
    }
    bool trials_ok = true;
    if (group.order() >= 2) {
      std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * (gi + 1)));
      for (int t = 0; t < config.samples && trials_ok; ++t) {
        const int g = static_cast<int>(rng() % group.order());
        const Automorphism phi = lift(graph, g);
        trials_ok = decode(graph, phi) == g &&
                    decode_consistency(graph, phi, 0, config.seed);
      }
    }
    entry["decode_trials"] = trials_ok;
    const bool group_ok = report.ok() && oracle_ok && degree_ok && trials_ok;
    entry["ok"] = group_ok;
    all_ok = all_ok && group_ok;
    results.push_back(std::move(entry));
  }
  out << results.dump(2) << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Realizes any finite group as the automorphism group of a "
               "graph, with verification and codec tooling."};
  app.name("frucht");
  app.footer(kExitCodeTable);
  app.require_subcommand(1);

  const auto add_group_flags = [&](CLI::App* sub) {
    sub->add_option("--group", config.group_spec,
                    "catalog spec: trivial | cyclic:N | dihedral:N | "
                    "symmetric:N | quaternion8 | product:SPEC,SPEC[,...]");
    sub->add_option("--cayley-file", config.cayley_file,
                    "JSON file {\"order\": n, \"table\": [[...], ...]}");
  };
  const auto add_export_flags = [&](CLI::App* sub) {
    sub->add_option("--export-format", config.export_format,
                    "edgelist | dot | json")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    sub->add_option("--out", config.out, "write the export here, not stdout");
  };

  CLI::App* build = app.add_subcommand(
      "build", "materialize the graph for a group and export it");
  add_group_flags(build);
  add_export_flags(build);

  CLI::App* verify = app.add_subcommand(
      "verify", "check that the graph's automorphism group is the group");
  add_group_flags(verify);
  verify->add_option("--budget", config.budget, "search node budget")
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", config.samples,
                     "decode probes per automorphism (0 = all)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* gadget =
      app.add_subcommand("gadget", "materialize one coded gadget graph");
  gadget->add_option("--bits", config.gadget_bits,
                     "code word, e.g. 010 (must end in 0)")
      ->required();
  add_export_flags(gadget);
  gadget->add_flag("--check-rigidity", config.check_rigidity,
                   "also report anchored rigidity; exit 1 if not rigid");

  CLI::App* codec = app.add_subcommand(
      "codec", "evaluate the pairing/digit/code-word encoders");
  codec->add_option("--pair", [&config](const CLI::results_t& res) {
    config.pair_arg = res[0];
    return true;
  }, "encode \"m,n\" to a single natural");
  codec->add_option("--unpair", [&config](const CLI::results_t& res) {
    config.unpair_arg = parse_u64(res[0], "--unpair");
    return true;
  }, "decode a natural back to (m, n)");
  codec->add_option("--xi", [&config](const CLI::results_t& res) {
    config.xi_arg = res[0];
    return true;
  }, "rational in [0,1] as p/q; use with --index and/or --depth");
  codec->add_option("--index", [&config](const CLI::results_t& res) {
    config.xi_index = parse_u64(res[0], "--index");
    return true;
  }, "digit position to evaluate");
  codec->add_option("--depth", [&config](const CLI::results_t& res) {
    config.xi_depth = parse_u64(res[0], "--depth");
    return true;
  }, "number of leading digits to print");
  codec->add_flag("--words", config.words,
                  "print the code words assigned to a group's elements");
  add_group_flags(codec);

  CLI::App* decode = app.add_subcommand(
      "decode", "read a vertex permutation and recover the group element");
  add_group_flags(decode);
  decode->add_option("--perm-file", config.perm_file,
                     "JSON array of [\"x,y,k\", \"x,y,k\"] pairs")
      ->required();
  decode->add_option("--samples", config.samples,
                     "consistency probes (0 = all)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* suite = app.add_subcommand(
      "suite", "run the whole catalog battery and report per group");
  suite->add_option("--max-order", config.max_order,
                    "largest catalog group order to include")
      ->check(CLI::PositiveNumber);
  suite->add_option("--samples", config.samples,
                    "decode trials / probes per group")
      ->check(CLI::NonNegativeNumber);
  suite->add_option("--budget", config.budget, "search node budget")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested{subs.empty() ? app.help() : subs[0]->help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (build->parsed()) config.command = Command::build;
  if (verify->parsed()) config.command = Command::verify;
  if (gadget->parsed()) config.command = Command::gadget;
  if (codec->parsed()) config.command = Command::codec;
  if (decode->parsed()) config.command = Command::decode;
  if (suite->parsed()) config.command = Command::suite;

  if (!config.group_spec.empty() && !config.cayley_file.empty())
    throw UsageError("--group and --cayley-file are mutually exclusive");
  if ((build->parsed() || verify->parsed() || decode->parsed()) &&
      config.group_spec.empty() && config.cayley_file.empty())
    throw UsageError("missing --group or --cayley-file");

  if (const char* seed_env = std::getenv("FRUCHT_SEED"))
    config.seed = parse_u64(seed_env, "FRUCHT_SEED");
  return config;
}

int execute(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::build:
      return run_build(config, out);
    case Command::verify:
      return run_verify(config, out);
    case Command::gadget:
      return run_gadget(config, out);
    case Command::codec:
      return run_codec(config, out);
    case Command::decode:
      return run_decode(config, out);
    case Command::suite:
      return run_suite(config, out);
  }
  throw InternalError("unhandled command");
}

int safe_execute(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  try {
    return execute(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return InternalError("").exit_code();
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  }
  return safe_execute(config, std::cout, std::cerr);
}

}  // namespace frucht::cli
