#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gcs/cli/commands.hpp"
#include "gcs/errors.hpp"

using namespace gcs::cli;

int main(int argc, char** argv) {
  CLI::App app{"Generalized conditional symmetries of evolution equations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::string seed, tspan, out;
  app.add_flag("--json", opts.json, "Emit the report as JSON");
  app.add_option("--seed", seed, "Sampling seed (decimal or 0x-hex)");
  app.add_option("--points", opts.points, "Number of sample points")->check(CLI::PositiveNumber);
  app.add_option("--threshold", opts.threshold, "Zero-test threshold")->check(CLI::PositiveNumber);
  app.add_option("--step", opts.step, "RK4 step")->check(CLI::PositiveNumber);
  app.add_option("--tspan", tspan, "Integration interval A:B");
  app.add_option("--out", out, "Write the report to PATH instead of stdout");

  std::string problem_path, demo_name;
  const std::pair<const char*, const char*> commands[] = {
      {"check", "Decide whether the operator is a conditional symmetry (three methods)"},
      {"reduce", "Reduce the equation with the ansatz to an ODE system"},
      {"convert", "Convert an operator to reduced and canonical form"},
      {"derive-operator", "Canonical operator associated with the ansatz"},
      {"verify-solution", "Check that a family solves the equation; essentiality of its parameters"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->add_option("problem", problem_path, "Problem file")->required();
  }
  app.add_subcommand("demo", "Run a bundled end-to-end example")
      ->add_option("name", demo_name, "sl2 | fast-diffusion-w | heat")
      ->required()
      ->check(CLI::IsMember({"sl2", "fast-diffusion-w", "heat"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report;
  try {
    if (!seed.empty()) opts.seed = std::stoull(seed, nullptr, 0);
    if (!tspan.empty()) {
      const auto colon = tspan.find(':');
      if (colon == std::string::npos) throw gcs::InvalidArgument("--tspan expects A:B");
      opts.t0 = std::stod(tspan.substr(0, colon));
      opts.t1 = std::stod(tspan.substr(colon + 1));
    }
    if (command == "demo") {
      report = cmd_demo(demo_name, opts);
    } else {
      const Problem p = load_problem(problem_path);
      if (command == "check") report = cmd_check(p, opts);
      if (command == "reduce") report = cmd_reduce(p, opts);
      if (command == "convert") report = cmd_convert(p, opts);
      if (command == "derive-operator") report = cmd_derive_operator(p, opts);
      if (command == "verify-solution") report = cmd_verify_solution(p, opts);
    }
  } catch (const std::exception& e) {
    report = error_report(command, e.what(), opts);
  }

  const std::string text = report.render(opts.json);
  if (out.empty()) {
    (report.exit_code == 2 && !opts.json ? std::cerr : std::cout) << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return report.exit_code;
}
