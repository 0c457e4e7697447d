#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "descent/catalog.hpp"
#include "descent/gbasis.hpp"
#include "json.hpp"

namespace descent::cli {

enum ExitCode : int {
  kOk = 0,
  kBlocked = 1,  // also: table mismatch, oracle disagreement
  kUsage = 2,
  kEngineLimit = 3,
  kInconsistent = 4,
};

/// What a subcommand produced. `json` is the machine-readable form; `text`
/// the aligned table; `diagnostics` goes to standard error.
struct CommandResult {
  int exit_code = kOk;
  nlohmann::ordered_json json = nlohmann::ordered_json::object();
  std::string text;
  std::string diagnostics;
};

struct AnalyzeRequest {
  unsigned p = 2;
  std::vector<std::string> vars{"x", "y", "z"};
  std::string poly;
  bool short_circuit = false;
  bool timings = false;
  EngineLimits limits;
};

struct OracleRequest {
  unsigned p = 2;
  std::vector<std::string> vars{"x", "y", "z"};
  /// Explicit generators, or a single equation when `ideal` is set.
  std::vector<std::string> gens;
  /// "jacobian" or "bracket": build the ideal from gens[0].
  std::optional<std::string> ideal;
  unsigned degree_cap = 64;
  EngineLimits limits;
};

/// Throws UsageError, ParseError, EngineLimitError or ConsistencyError.
CommandResult cmd_analyze(const AnalyzeRequest& req, const Catalog& catalog);
CommandResult cmd_tables(PrimeChar ch, unsigned max_n, const Catalog& catalog,
                         const EngineLimits& limits = {});
CommandResult cmd_classify(PrimeChar ch, unsigned max_n, const Catalog& catalog,
                           const EngineLimits& limits = {});
CommandResult cmd_oracle(const OracleRequest& req);

/// Full command line (argv[0] included). Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descent::cli
