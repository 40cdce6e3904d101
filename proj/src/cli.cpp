#include "fbc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbc/automata.hpp"
#include "fbc/cayley.hpp"
#include "fbc/experiments.hpp"
#include "fbc/fellow.hpp"
#include "fbc/rewrite.hpp"

namespace fbc {

namespace {

void error_record(std::ostream& err, const std::string& kind, const std::string& message) {
  err << nlohmann::ordered_json{{"error", kind}, {"message", message}}.dump() << "\n";
}

int usage_error(std::ostream& err, const std::string& message) {
  error_record(err, "usage", message);
  return 2;
}

bool format_in(const CliConfig& config, std::initializer_list<const char*> allowed) {
  return std::any_of(allowed.begin(), allowed.end(),
                     [&](const char* f) { return config.format == f; });
}

int run_normalize(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream& err) {
  if (!format_in(config, {"json", "text"})) return usage_error(err, "normalize supports --format json|text");
  const NormalForm nf = normalize(spec, parse_word(spec, config.word));
  if (config.format == "text") out << spelled(nf) << "\n";
  else out << nf_to_json(nf).dump() << "\n";
  return 0;
}

int run_wp(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream&) {
  out << (word_problem(spec, parse_word(spec, config.word)) ? "identity" : "non-identity") << "\n";
  return 0;
}

int run_member(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream&) {
  const Automaton aut = build_acceptor(spec);
  out << (accepts(aut, parse_word(spec, config.word)) ? "accept" : "reject") << "\n";
  return 0;
}

int run_dfa(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream& err) {
  if (config.dfa_export != "json" && config.dfa_export != "dot") {
    return usage_error(err, "dfa supports --export json|dot");
  }
  const Automaton aut = build_acceptor(spec);
  out << export_automaton(aut, config.dfa_export == "dot" ? ExportFormat::dot : ExportFormat::json);
  if (config.dfa_export == "json") out << "\n";
  return 0;
}

int run_ball(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream& err) {
  if (!format_in(config, {"json", "csv", "dot"})) return usage_error(err, "ball supports --format json|csv|dot");
  const BallIndex ball = build_ball(spec, config.radius, config.entry_cap);
  if (config.format == "dot") {
    out << ball_to_dot(spec, ball);
    return 0;
  }
  std::vector<std::pair<std::string, std::int64_t>> rows;
  rows.reserve(ball.entries.size());
  for (const auto& [key, entry] : ball.entries) rows.emplace_back(key, entry.distance);
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  if (config.format == "csv") {
    out << "key,distance\n";
    for (const auto& [key, d] : rows) out << key << ',' << d << "\n";
  } else {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [key, d] : rows) entries.push_back({{"key", key}, {"distance", d}});
    out << nlohmann::ordered_json{{"radius", ball.radius}, {"entries", entries}}.dump() << "\n";
  }
  return 0;
}

int run_fellow(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream& err) {
  if (config.mode != "sync" && config.mode != "async") return usage_error(err, "fellow supports --mode sync|async");
  if (!format_in(config, {"json", "text"})) return usage_error(err, "fellow supports --format json|text");
  const Word lhs = parse_word(spec, config.lhs);
  const Word rhs = parse_word(spec, config.rhs);
  nlohmann::ordered_json j{{"mode", config.mode}, {"cap", config.cap}};
  std::string text;
  if (config.mode == "sync") {
    const auto d = sync_fellow_distance(spec, lhs, rhs, config.cap);
    j["distance"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
    j["exceeds_cap"] = !d.has_value();
    text = d ? std::to_string(*d) : "exceeds-cap";
  } else {
    const auto r = async_fellow_distance(spec, lhs, rhs, config.cap);
    j["distance"] = r ? nlohmann::ordered_json(r->distance) : nlohmann::ordered_json(nullptr);
    j["exceeds_cap"] = !r.has_value();
    j["alignment"] = r ? r->alignment.step_string() : "";
    text = r ? std::to_string(r->distance) + " " + r->alignment.step_string() : "exceeds-cap";
  }
  if (config.format == "text") out << text << "\n";
  else out << j.dump() << "\n";
  return 0;
}

int run_combing(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream& err) {
  if (!format_in(config, {"json"})) return usage_error(err, "combing-check supports --format json");
  const FellowReport report = combing_sweep(spec, config.samples, config.maxlen, config.seed);
  out << report.to_json().dump() << "\n";
  return 0;
}

int run_quasigeodesic(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream& err) {
  if (!format_in(config, {"json", "csv"})) return usage_error(err, "quasigeodesic supports --format json|csv");
  const auto rows = quasigeodesic_table(spec, config.stable, config.kmax, config.jmax,
                                        config.verify_radius, config.entry_cap);
  if (config.format == "csv") out << quasi_table_csv(rows);
  else out << quasi_table_json(rows).dump() << "\n";
  return 0;
}

int run_conjugation(const CliConfig& config, const GroupSpec& spec, std::ostream& out, std::ostream& err) {
  if (!format_in(config, {"json", "csv"})) return usage_error(err, "conjugation-check supports --format json|csv");
  const auto rows = conjugation_check(spec, config.pmax);
  if (config.format == "csv") out << conjugation_csv(rows);
  else out << conjugation_json(rows).dump() << "\n";
  return 0;
}

}  // namespace

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.exponents.empty()) {
      return usage_error(err, "no group given: pass --exponents n1,n2,... or --config file");
    }
    const GroupSpec spec{config.exponents};
    if (config.subcommand == "normalize") return run_normalize(config, spec, out, err);
    if (config.subcommand == "wp") return run_wp(config, spec, out, err);
    if (config.subcommand == "member") return run_member(config, spec, out, err);
    if (config.subcommand == "dfa") return run_dfa(config, spec, out, err);
    if (config.subcommand == "ball") return run_ball(config, spec, out, err);
    if (config.subcommand == "fellow") return run_fellow(config, spec, out, err);
    if (config.subcommand == "combing-check") return run_combing(config, spec, out, err);
    if (config.subcommand == "quasigeodesic") return run_quasigeodesic(config, spec, out, err);
    if (config.subcommand == "conjugation-check") return run_conjugation(config, spec, out, err);
    return usage_error(err, "unknown subcommand '" + config.subcommand + "'");
  } catch (const parse_error& e) {
    error_record(err, "parse", e.what());
    return 1;
  } catch (const ball_capacity_error& e) {
    error_record(err, "cap", e.what());
    return 1;
  } catch (const enumeration_error& e) {
    error_record(err, "cap", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_record(err, "internal", e.what());
    return 1;
  }
}

namespace {

std::vector<std::int64_t> parse_exponent_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--exponents", "bad integer '" + item + "'");
    }
  }
  return out;
}

void apply_config_file(const std::string& path, CLI::App& app, CliConfig& config) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  auto unset = [&app](const std::string& flag) { return app.count(flag) == 0; };
  if (j.contains("exponents") && unset("--exponents")) {
    config.exponents = j["exponents"].get<std::vector<std::int64_t>>();
  }
  if (j.contains("seed") && unset("--seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("radius") && unset("--radius")) config.radius = j["radius"].get<std::int64_t>();
  if (j.contains("entry_cap") && unset("--entry-cap")) config.entry_cap = j["entry_cap"].get<std::uint64_t>();
  if (j.contains("cap") && unset("--cap")) config.cap = j["cap"].get<std::int64_t>();
  if (j.contains("format") && unset("--format")) config.format = j["format"].get<std::string>();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string exponent_text;
  std::string config_path;

  CLI::App app{"normal forms, word problem, and combing experiments for the groups "
               "<a, t, b1..bk | at = ta, bi^-1 t bi = a^ni t>"};
  app.name("fbc");
  app.add_option("--exponents", exponent_text, "comma-separated exponents n1,n2,...,nk");
  app.add_option("--config", config_path, "JSON config file; flags override its fields");
  app.add_option("--format", config.format, "output format (json|csv|dot|text; default json)");
  app.add_option("--seed", config.seed, "seed for randomized subcommands (default 0)");
  app.add_option("--radius", config.radius, "ball radius (default 8)");
  app.add_option("--entry-cap", config.entry_cap, "ball entry cap (default 5000000)");
  app.add_option("--cap", config.cap, "distance cap for fellow-traveler queries (default 8)");
  app.require_subcommand(0, 1);

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a word");
  normalize_cmd->add_option("word", config.word, "word to normalize")->required();
  auto* wp_cmd = app.add_subcommand("wp", "decide whether a word is the identity");
  wp_cmd->add_option("word", config.word, "word to decide")->required();
  auto* member_cmd = app.add_subcommand("member", "acceptor membership of a word");
  member_cmd->add_option("word", config.word, "word to test")->required();
  auto* dfa_cmd = app.add_subcommand("dfa", "export the normal-form acceptor");
  dfa_cmd->add_option("--export", config.dfa_export, "dot|json (default json)");
  app.add_subcommand("ball", "BFS ball of the Cayley graph keyed by normal form");
  auto* fellow_cmd = app.add_subcommand("fellow", "fellow-traveler distance between two words");
  fellow_cmd->add_option("--mode", config.mode, "sync|async (default async)");
  fellow_cmd->add_option("--lhs", config.lhs, "left word")->required();
  fellow_cmd->add_option("--rhs", config.rhs, "right word")->required();
  auto* combing_cmd = app.add_subcommand("combing-check", "sampled combing-constant sweep");
  combing_cmd->add_option("--samples", config.samples, "number of sampled L-words (default 100)");
  combing_cmd->add_option("--maxlen", config.maxlen, "maximum sampled word length (default 20)");
  auto* quasi_cmd = app.add_subcommand("quasigeodesic", "growth table for b_i^-k t^j");
  quasi_cmd->add_option("--stable", config.stable, "stable-letter index (default 1)");
  quasi_cmd->add_option("--kmax", config.kmax, "largest k (default 5)");
  quasi_cmd->add_option("--jmax", config.jmax, "largest j (default 5)");
  quasi_cmd->add_option("--verify-radius", config.verify_radius, "BFS verification radius (default 7)");
  auto* conj_cmd = app.add_subcommand("conjugation-check", "iterated conjugation table");
  conj_cmd->add_option("--pmax", config.pmax, "largest power (default 10)");

  std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
  try {
    app.parse(args);
    if (!config_path.empty()) apply_config_file(config_path, app, config);
    if (!exponent_text.empty()) config.exponents = parse_exponent_list(exponent_text);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_record(err, "usage", e.what());
    return 2;
  }

  const auto subcommands = app.get_subcommands();
  if (subcommands.empty()) {
    out << app.help();
    return 2;
  }
  config.subcommand = subcommands.front()->get_name();
  return dispatch(config, out, err);
}

}  // namespace fbc
