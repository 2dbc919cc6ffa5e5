#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace dqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Parsed invocation. `parameters` holds the raw flag values keyed by flag
/// name without dashes; numeric validation happens in run().
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 7;
  Format format = Format::Csv;
  std::string output;
};

/// A bad or missing value for a named flag.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(const std::string& name, const std::string& what)
      : std::invalid_argument("invalid parameter --" + name + ": " + what), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Thrown for an unknown subcommand or unparsable flags; the message is the
/// usage text.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `--help` anywhere; the message is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `args` excludes the program name.
RunConfig parse_command_line(const std::vector<std::string>& args);

/// Dispatches, writes the artifact to config.output (or `out`), and returns
/// the exit status. Parameter errors are written to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run, mapping usage errors to kExitUsage.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// kExitOk when every row passes, kExitChecksFailed otherwise.
int exit_status(const VerificationReport& report);

/// Plain table artifact: CSV with a header line, or JSON
/// {"columns": [...], "rows": [[...], ...]}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string export_table(const Table& table, Format format);

}  // namespace dqm::cli
