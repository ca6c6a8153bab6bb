#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "gcs/cli/problem.hpp"

namespace gcs::cli {

struct Options {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::optional<double> threshold;
  double step = 1e-3;
  double t0 = 0.0;
  double t1 = 0.05;
};

// Exit codes: 0 success / symmetry, 1 negative verdict, 2 error or undecided.
struct Report {
  int exit_code = 0;
  nlohmann::json json;
  std::string text;

  std::string render(bool as_json) const;
};

SamplePlan effective_plan(const Problem& p, const Options& opts);

Report cmd_check(const Problem& p, const Options& opts);
Report cmd_reduce(const Problem& p, const Options& opts);
Report cmd_convert(const Problem& p, const Options& opts);
Report cmd_derive_operator(const Problem& p, const Options& opts);
Report cmd_verify_solution(const Problem& p, const Options& opts);
// name: sl2 | fast-diffusion-w | heat
Report cmd_demo(const std::string& name, const Options& opts);

Report error_report(const std::string& command, const std::string& message, const Options& opts);

}  // namespace gcs::cli
