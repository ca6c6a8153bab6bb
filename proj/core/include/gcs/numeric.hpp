#pragma once

// Double-precision evaluation and the randomized zero test that backs every
// identity check in the library.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gcs/expr.hpp"

namespace gcs {

using Point = std::map<Symbol, double>;

struct EvalResult {
  double value = 0.0;
  // Largest |intermediate| seen while evaluating; used to scale thresholds.
  double scale = 0.0;
};

// Throws DomainError on a negative base with a fractional exponent, ln of a
// non-positive value, a near-zero denominator (|d| < 1e-12) or overflow.
EvalResult evaluate(const Expr& e, const Point& point);
double eval(const Expr& e, const Point& point);

struct SamplePlan {
  std::uint64_t seed = 0xC0FFEE;
  int n_points = 50;
  double lo = 0.5;
  double hi = 2.5;
  std::map<Symbol, std::pair<double, double>> box;  // per-symbol overrides
  double threshold = 1e-9;
  bool scale_relative = true;
  int max_retries = 10;

  std::pair<double, double> interval(const Symbol& s) const;

  // Coordinate of symbol s in sample `index`, attempt `attempt`. Depends only
  // on (seed, index, attempt, s), so expressions over different symbol sets
  // see the same value for shared symbols.
  double sample(const Symbol& s, int index, int attempt = 0) const;
};

struct ZeroVerdict {
  enum class Status { ProvenZero, ProbablyZero, NonZero, Inconclusive };

  Status status = Status::ProvenZero;
  int points_tested = 0;
  int domain_retries = 0;
  std::optional<Point> witness;  // NonZero only
  int witness_index = -1;
  double witness_value = 0.0;
  double max_abs_value = 0.0;
  std::string message;

  bool zero() const { return status == Status::ProvenZero || status == Status::ProbablyZero; }
  bool nonzero() const { return status == Status::NonZero; }
};

std::string to_string(ZeroVerdict::Status s);

// Point `index` of the plan restricted to the given symbols (attempt 0).
Point sample_point(const SamplePlan& plan, const std::set<Symbol>& symbols, int index, int attempt = 0);

// Evaluates e at plan.n_points seeded points. A point passes when
// |value| <= threshold * max(1, scale).
ZeroVerdict probabilistic_zero_test(const Expr& e, const SamplePlan& plan = {});

// ProvenZero when e normalizes to the literal 0, otherwise the randomized test.
ZeroVerdict is_zero(const Expr& e, const SamplePlan& plan = {});

}  // namespace gcs
