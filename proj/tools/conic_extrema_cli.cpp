#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conic_extrema/conic_extrema.h"

int main(int argc, char** argv) {
  CLI::App app{"Extremal conics: exparabolas, maximal parabolas and minimal horocycles"};
  app.set_version_flag("--version", std::string(cx_version()));
  app.require_subcommand(1, 1);

  std::string input;
  std::string output;
  std::string svg;
  std::uint64_t seed = 0;
  int grid = 0;
  int starts = 0;
  std::vector<std::string> tol_args;

  const char* commands[][2] = {
      {"exparabola", "The three exparabolas of a triangle"},
      {"max-parabola", "Largest parabola inscribed in an intersection of half-planes"},
      {"lemma-shrink", "Shrunk horocycle through the common interior of two equal horocycles"},
      {"min-horocycle", "Minimal horocycle enclosing a point set"},
      {"verify", "Numerical verification suites"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("--input", input, "Input JSON document")->required();
    sub->add_option("--output", output, "Output JSON document")->required();
    sub->add_option("--svg", svg, "Optional SVG figure");
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("--grid", grid, "Angle grid size (min-horocycle)")->check(CLI::PositiveNumber);
    sub->add_option("--starts", starts, "Multi-start count (max-parabola)")->check(CLI::PositiveNumber);
    sub->add_option("--tol", tol_args, "Override as key=value (scale, refine_tol, perturbations, samples)")
        ->delimiter(',');
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  std::map<std::string, double> tolerances;
  for (const std::string& arg : tol_args) {
    const auto eq = arg.find('=');
    try {
      std::size_t used = 0;
      if (eq == std::string::npos || eq == 0) throw std::invalid_argument(arg);
      tolerances[arg.substr(0, eq)] = std::stod(arg.substr(eq + 1), &used);
      if (used != arg.size() - eq - 1) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      std::cerr << "--tol expects key=value, got '" << arg << "'\n";
      return 3;
    }
  }

  std::unique_ptr<cx_context, decltype(&cx_context_free)> ctx(cx_context_new(), cx_context_free);
  const std::string name = app.get_subcommands().front()->get_name();
  std::unique_ptr<cx_job, decltype(&cx_job_free)> job(cx_job_new(ctx.get(), name.c_str()), cx_job_free);
  if (!job) {
    std::cerr << cx_last_error(ctx.get()) << '\n';
    return 3;
  }
  cx_job_set_input(job.get(), input.c_str());
  cx_job_set_output(job.get(), output.c_str());
  if (!svg.empty()) cx_job_set_svg(job.get(), svg.c_str());
  cx_job_set_seed(job.get(), seed);
  if (grid > 0) cx_job_set_grid(job.get(), grid);
  if (starts > 0) cx_job_set_starts(job.get(), starts);
  for (const auto& [key, value] : tolerances) cx_job_set_tolerance(job.get(), key.c_str(), value);

  const cx_status status = cx_job_run(ctx.get(), job.get());
  const std::string diagnostic = cx_last_error(ctx.get());
  if (!diagnostic.empty()) std::cerr << diagnostic << '\n';
  return static_cast<int>(status);
}
