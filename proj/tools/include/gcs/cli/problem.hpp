#pragma once

// Line-oriented problem files:
//
//   # comment
//   depvar: v
//   equation.order: 2
//   equation.rhs: v_2 - v^3/x^3
//   operator.form: reduced | canonical | usual
//   operator.eta / operator.rho / operator.etacheck / operator.tau / operator.xi
//   ansatz.rho, ansatz.F, ansatz.params (comma separated)
//   family.rho, family.f, family.params
//   oracle.seed, oracle.points, oracle.threshold
//   expect.operator: symmetry | not-symmetry
//   expect.ansatz: reducible | not-reducible

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/equation.hpp"
#include "gcs/numeric.hpp"
#include "gcs/reduction.hpp"
#include "gcs/symmetry.hpp"

namespace gcs::cli {

struct OperatorSpec {
  std::string form;  // reduced | canonical | usual
  std::string eta;
  std::string etacheck;
  std::string tau;
  std::string xi;
  std::optional<int> rho;
};

struct FamilySpec {
  int rho = 0;
  std::string expr;
  std::vector<std::string> params;
};

struct Problem {
  std::string name;
  std::string source;
  std::string depvar = "u";
  std::optional<int> order;
  std::string rhs;
  std::optional<OperatorSpec> op;
  std::optional<FamilySpec> ansatz;
  std::optional<FamilySpec> family;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::optional<double> threshold;
  std::optional<bool> expect_symmetry;
  std::optional<bool> expect_reducible;
};

// Throws ParseError with a line-qualified message.
Problem parse_problem(std::string_view text, std::string source = "<input>");
Problem load_problem(const std::filesystem::path& path);

// Oracle settings from the file, defaults otherwise.
SamplePlan sample_plan(const Problem& p);

bool has_equation(const Problem& p);
EvolutionEquation build_equation(const Problem& p, const SamplePlan& plan);
Expr parse_field(const Problem& p, const std::string& field, const std::string& text);

// Reduced or canonical operator; usual operators go through the conversion.
GcsOperator build_operator(const Problem& p, const EvolutionEquation* eq, const SamplePlan& plan);
UsualOperator build_usual_operator(const Problem& p);
Ansatz build_ansatz(const Problem& p, const SamplePlan& plan);
SolutionFamily build_family(const Problem& p);

}  // namespace gcs::cli
