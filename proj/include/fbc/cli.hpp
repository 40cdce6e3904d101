#ifndef FBC_CLI_HPP
#define FBC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fbc/presentation.hpp"

namespace fbc {

/// Parsed invocation: the group, the subcommand, and its parameters.
struct CliConfig {
  std::vector<std::int64_t> exponents;
  std::string subcommand;
  std::string format = "json";  // json | csv | dot | text, validated per subcommand

  std::uint64_t seed = 0;
  std::int64_t radius = 8;
  std::uint64_t entry_cap = 5'000'000;
  std::int64_t cap = 8;

  // subcommand payload
  std::string word;
  std::string lhs;
  std::string rhs;
  std::string mode = "async";           // fellow
  std::string dfa_export = "json";      // dfa
  int stable = 1;                       // quasigeodesic
  std::int64_t kmax = 5;
  std::int64_t jmax = 5;
  std::int64_t verify_radius = 7;
  std::int64_t samples = 100;           // combing-check
  std::int64_t maxlen = 20;
  std::int64_t pmax = 10;               // conjugation-check
};

/// Run a parsed invocation. Exit status 0 on success, 1 on domain errors
/// (word parse failures, resource caps), 2 on usage errors.
int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv (without the program name) and dispatch.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fbc

#endif
