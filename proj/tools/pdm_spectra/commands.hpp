#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pdm/config.hpp"

namespace pdm::cli {

/// Process exit codes.
enum Exit : int { kOk = 0, kFailed = 1, kConfigError = 2, kRuntimeError = 3 };

struct Overrides {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::string> picture;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
};

/// Defaults, then the config file, then command-line flags.
RunConfig resolve_config(const Overrides& o);

int cmd_orderings(const std::optional<std::string>& out_dir, std::ostream& out);
int cmd_map(const RunConfig& c, std::ostream& out);
int cmd_solve(const RunConfig& c, std::ostream& out);
/// which: isospectral | intertwine | analytic | eigensolver | all.
int cmd_verify(const RunConfig& c, const std::string& which, std::ostream& out);
int cmd_sweep(const RunConfig& c, std::ostream& out);
int cmd_defaults(std::ostream& out);

/// Full command line; maps errors onto exit codes and reports them on err.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pdm::cli
