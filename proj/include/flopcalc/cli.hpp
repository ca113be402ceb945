#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flopcalc/bordism.hpp"

namespace flopcalc {

enum ExitCode : int { kPass = 0, kVerifiedFalse = 1, kUsageError = 2, kSemanticError = 3 };

struct VerifyOptions {
  std::optional<int> max_dim;  // per-claim default when unset
  FamilyConfig config;
  std::uint64_t seed = 1;
  int samples = 100;  // random flop data beyond the configured alphabet (prop2)
  int jobs = 0;
  bool stability = false;  // theorem1: also rerun with the enlarged family
};

struct VerifyReport {
  std::string claim;
  std::string statement;
  int max_dim = 0;
  std::size_t checked = 0;
  bool pass = true;
  std::vector<std::string> lines;  // per-case summaries, in a fixed order
  std::optional<std::string> witness;  // a replayable `flopcalc number` call
};

class UnknownClaim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> claim_ids();
/// Throws UnknownClaim for an id outside claim_ids().
VerifyReport verify_claim(const std::string& id, const VerifyOptions& options);

/// Runs the command line `args` (without the program name). Output is
/// byte-identical for identical arguments; the return value is an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flopcalc
