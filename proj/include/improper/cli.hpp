#pragma once

// Command-line front end shared by the `improper` executable and the tests.

#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace improper::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Bad flag value, unknown config key, malformed grid, ...
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully resolved invocation: built-in defaults, then the config file, then
/// argv. Keys are option names without the leading dashes.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> options;

  std::string get(const std::string& key) const;
  double number(const std::string& key) const;
  int integer(const std::string& key) const;
  bool flag(const std::string& key) const;
};

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool diverged = false;
};

/// Subcommand names in documentation order.
std::vector<std::string> commands();

/// Resolve argv (without the program name) into a config. Returns false when
/// help was requested; the help text is then written to `help`.
bool parse_args(std::span<const std::string> args, RunConfig& config,
                std::ostream& help);

Table run(const RunConfig& config);

void write_csv(const RunConfig& config, const Table& table, std::ostream& out,
               bool timestamp);
void write_json(const RunConfig& config, const Table& table, std::ostream& out,
                bool timestamp);

/// Exit code 0 on success, 2 when the table reports a diverged result,
/// 1 on any error (one diagnostic line on `err`).
int cli_main(std::span<const std::string> args, std::ostream& out,
             std::ostream& err, bool color = false);

}  // namespace improper::cli
