// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PICARD_CLI_HPP
#define PICARD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace picard::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,   // unrealizable, or a check failed
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace picard::cli

#endif  // PICARD_CLI_HPP
