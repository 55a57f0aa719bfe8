#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gconv::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotInvertible = 2,
  kVerificationMismatch = 3,
};

struct Request {
  std::string command;  // norm, invert, compose, adjoint, apply, riesz, verify, extract
  std::vector<std::string> inputs;
  std::optional<double> det_tolerance;
  std::optional<std::size_t> grid;
  std::optional<std::string> out_path;
  bool quiet = false;
};

/// Runs one analysis and writes the JSON report to `out` (or to
/// request.out_path). Diagnostics go to `err`. Returns the process exit code.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// Default det tolerance from the GCONV_DET_TOL environment variable, if set.
std::optional<double> det_tolerance_from_env();

}  // namespace gconv::cli
