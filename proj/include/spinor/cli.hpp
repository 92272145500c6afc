#pragma once

#include "spinor/satake.hpp"
#include "spinor/serialize.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace spinor::cli {

inline constexpr const char* kFixturesEnv = "SPINOR_FIXTURES";
inline constexpr const char* kDefaultFixtures = "fixtures.json";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kBadInput = 2,
  kDomainError = 3,
};

enum class OutputFormat { Json, Table };

struct RunConfig {
  std::string fixtures_path;
  long prime_bound = 50;
  double tolerance = kDefaultTolerance;
  bool exact = true;
  OutputFormat format = OutputFormat::Json;

  // Throws InputError on a non-positive tolerance or a prime bound below 2.
  void validate() const;
};

/// --fixtures when given, else the environment override, else fixtures.json.
std::string resolve_fixtures_path(const std::string& flag_value);

/// Result of one command: the JSON payload and the exit status it implies.
struct CommandResult {
  Json result;
  int status = kSuccess;
};

CommandResult cmd_fixtures_gen(const RunConfig& config, std::size_t truncation);
CommandResult cmd_verify_miyawaki(const RunConfig& config);

/// Flattened "path<TAB>value" rendering of a JSON document.
std::string render_table(const Json& doc);

/// Entry point shared by the binary and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinor::cli
