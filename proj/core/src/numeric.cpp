#include "gcs/numeric.hpp"

#include <cmath>
#include <random>
#include <unordered_map>

#include "gcs/errors.hpp"

namespace gcs {

namespace {

constexpr double kTinyDenominator = 1e-12;

struct Evaluator {
  const Point& point;
  double scale = 0.0;
  std::unordered_map<const Node*, double> memo;

  double note(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite intermediate value");
    scale = std::max(scale, std::fabs(v));
    return v;
  }

  static double rational(const Rational& q) { return q.get_d(); }

  double power(double b, const Rational& e) {
    if (e.get_den() == 1) {
      if (sgn(e) < 0 && std::fabs(b) < kTinyDenominator) throw DomainError("near-zero denominator");
      return std::pow(b, rational(e));
    }
    if (b < 0.0) throw DomainError("fractional power of a negative value");
    if (sgn(e) < 0 && b < kTinyDenominator) throw DomainError("near-zero denominator");
    return std::pow(b, rational(e));
  }

  double run(const Expr& e) {
    if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
    double v = 0.0;
    switch (e.kind()) {
      case Kind::Number:
        v = rational(e.value());
        break;
      case Kind::Time:
      case Kind::Space:
      case Kind::Jet:
      case Kind::Param: {
        const Symbol s = *e.as_symbol();
        auto it = point.find(s);
        if (it == point.end()) throw InvalidArgument("unbound symbol " + s.id());
        v = it->second;
        break;
      }
      case Kind::Func: {
        const double a = run(e.arg());
        if (e.func() == FuncKind::Exp) {
          v = std::exp(a);
        } else {
          if (a <= 0.0) throw DomainError("logarithm of a non-positive value");
          v = std::log(a);
        }
        break;
      }
      case Kind::Power:
        v = power(run(e.base()), e.exponent());
        break;
      case Kind::Product: {
        v = rational(e.coefficient());
        for (const auto& op : e.operands()) v *= note(power(run(op.expr), op.scalar));
        break;
      }
      case Kind::Sum: {
        v = rational(e.coefficient());
        for (const auto& op : e.operands()) v += note(rational(op.scalar) * run(op.expr));
        break;
      }
    }
    note(v);
    memo.emplace(e.node(), v);
    return v;
  }
};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

EvalResult evaluate(const Expr& e, const Point& point) {
  Evaluator ev{point, 0.0, {}};
  const double v = ev.run(e);
  return {v, ev.scale};
}

double eval(const Expr& e, const Point& point) { return evaluate(e, point).value; }

std::pair<double, double> SamplePlan::interval(const Symbol& s) const {
  if (auto it = box.find(s); it != box.end()) return it->second;
  return {lo, hi};
}

double SamplePlan::sample(const Symbol& s, int index, int attempt) const {
  const std::uint64_t stream = splitmix64(seed) ^ splitmix64(fnv1a(s.id())) ^
                               splitmix64((static_cast<std::uint64_t>(index) << 20) + static_cast<std::uint64_t>(attempt));
  std::mt19937_64 gen(stream);
  const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  const auto [a, b] = interval(s);
  return a + (b - a) * unit;
}

std::string to_string(ZeroVerdict::Status s) {
  switch (s) {
    case ZeroVerdict::Status::ProvenZero:
      return "ProvenZero";
    case ZeroVerdict::Status::ProbablyZero:
      return "ProbablyZero";
    case ZeroVerdict::Status::NonZero:
      return "NonZero";
    case ZeroVerdict::Status::Inconclusive:
      return "Inconclusive";
  }
  return {};
}

Point sample_point(const SamplePlan& plan, const std::set<Symbol>& symbols, int index, int attempt) {
  Point p;
  for (const auto& s : symbols) p[s] = plan.sample(s, index, attempt);
  return p;
}

ZeroVerdict probabilistic_zero_test(const Expr& e, const SamplePlan& plan) {
  ZeroVerdict out;
  out.status = ZeroVerdict::Status::ProbablyZero;
  const auto symbols = free_symbols(e);
  for (int i = 0; i < plan.n_points; ++i) {
    bool evaluated = false;
    for (int attempt = 0; attempt <= plan.max_retries && !evaluated; ++attempt) {
      Point p = sample_point(plan, symbols, i, attempt);
      EvalResult r;
      try {
        r = evaluate(e, p);
      } catch (const DomainError&) {
        ++out.domain_retries;
        continue;
      }
      evaluated = true;
      ++out.points_tested;
      const double mag = std::fabs(r.value);
      out.max_abs_value = std::max(out.max_abs_value, mag);
      const double limit = plan.threshold * (plan.scale_relative ? std::max(1.0, r.scale) : 1.0);
      if (mag > limit) {
        out.status = ZeroVerdict::Status::NonZero;
        out.witness = std::move(p);
        out.witness_index = i;
        out.witness_value = r.value;
        return out;
      }
    }
    if (!evaluated) {
      out.status = ZeroVerdict::Status::Inconclusive;
      out.message = "every retry at sample " + std::to_string(i) + " left the evaluation domain";
      return out;
    }
  }
  return out;
}

ZeroVerdict is_zero(const Expr& e, const SamplePlan& plan) {
  const Expr n = normalize(e);
  if (n.is_zero()) return ZeroVerdict{};
  return probabilistic_zero_test(n, plan);
}

}  // namespace gcs
