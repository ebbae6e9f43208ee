// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eaqecc::cli {

/// Exit codes: 0 success, 1 check failed or violations found, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bundled data directory: $EAQECC_DATA if set, else the configured default.
std::string default_data_dir();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Re-derives every bundled golden fact from the files in `data_dir`.
/// Throws eaqecc::Error naming the file when an asset is missing.
std::vector<CheckResult> verify_bundled(const std::string& data_dir);

}  // namespace eaqecc::cli
