#ifndef ISECT_CLI_HPP
#define ISECT_CLI_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isect/core.hpp"
#include "isect/fanalg.hpp"

namespace isect {

struct JobOptions {
  Int degree_cap{10};
  Int rs_bound{25};
  Int m_bound{0};  // 0 = sized automatically from the input
  Int multiplier_bound{4};
  std::string format{"text"};
  std::optional<std::vector<std::pair<Rational, Rational>>> fan_linear;
};

struct JobSpec {
  std::string command;
  std::vector<Int> a;
  std::vector<Int> b;
  JobOptions options;
};

/// Thrown when --help was requested; carries the text to print.
struct HelpRequested {
  std::string text;
};

/// Parses argv (without the program name) into a validated JobSpec.
/// Throws Error("UsageError", ...) on bad flags and HelpRequested for -h.
JobSpec parse_args(const std::vector<std::string>& argv);

struct RunResult {
  int exit_code{0};  // 0 ok, 4 verification failure
  std::string output;
};

/// Executes the job and renders the report in the selected format.
/// Domain errors propagate as Error (exit code 3 at the process level).
RunResult run(const JobSpec& job);

}  // namespace isect

#endif
