#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "zzosp/algebras_spec.hpp"
#include "zzosp/json_io.hpp"
#include "zzosp/report.hpp"

namespace zzosp::cli {

inline constexpr const char* kToolName = "zzosp";
inline constexpr const char* kToolVersion = "0.1.0";

/// Largest matrix size accepted without --force.
inline constexpr std::size_t kMaxDeskSize = 40;

enum class Subcommand { basis, dims, check_osp, check_jacobi, check_relations, report };
enum class OutputFormat { json, text };

std::string to_string(Subcommand s);

struct RunConfig {
  Subcommand subcommand = Subcommand::report;
  AlgebraSpec spec;
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::json;
  std::size_t max_counterexamples = kDefaultMaxCounterexamples;
  std::size_t jobs = 0;  // 0: all available cores
  bool force = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Builds and runs every check a subcommand covers and returns the report
/// document ({"tool", "version", "spec", "checks", "summary"}). Not used for
/// `basis` and `dims`, whose documents have their own shape.
Json run_checks(const RunConfig& config);

/// 0 when the report document's summary records no failures, 1 otherwise.
int exit_status(const Json& report);

/// Runs a validated config, writing the document to config.output or `out`.
/// Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors print to `err` and return 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zzosp::cli
