#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cx::app {

enum class Command { Exparabola, MaxParabola, LemmaShrink, MinHorocycle, Verify };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c) noexcept;

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kVerificationFailed = 2, kIoError = 3 };

/// Malformed input document or option (maps to exit code 3).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobOptions {
  std::uint64_t seed = 0;
  std::optional<int> grid;
  std::optional<int> starts;
  bool want_svg = false;
  // Recognised keys: scale, refine_tol, perturbations, samples.
  std::map<std::string, double> tolerances;
};

struct JobOutput {
  int exit_code = kSuccess;  // kSuccess or kVerificationFailed
  std::string json;          // pretty-printed, newline terminated
  std::optional<std::string> svg;
};

/// Runs one command on an in-memory JSON document. Throws ParseError for
/// schema problems and cx::Error for domain errors.
JobOutput execute(Command command, const std::string& input, const JobOptions& options);

struct JobSpec {
  Command command = Command::Verify;
  std::string input_path;
  std::string output_path;
  std::optional<std::string> svg_path;
  JobOptions options;
};

struct RunOutcome {
  int exit_code = kSuccess;
  std::string diagnostic;  // single-line JSON, empty on success
};

/// File-based job: reads the input, writes the output (and SVG) once at
/// completion. Never throws.
RunOutcome run(const JobSpec& spec);

/// Executes and maps every failure to an exit code plus diagnostic line.
RunOutcome execute_to(Command command, const std::string& input, const JobOptions& options,
                      JobOutput& out);

}  // namespace cx::app
