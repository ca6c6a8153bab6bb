#include "gcs/integration.hpp"

#include <cmath>

#include "gcs/errors.hpp"

namespace gcs {

namespace {

using State = std::vector<double>;

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rhs {
 public:
  explicit Rhs(const ReducedSystem& sys) : sys_(sys) {
    for (const auto& p : sys.params) syms_.push_back(Symbol::param(p));
  }

  State operator()(double t, const State& y) const {
    Point pt{{Symbol::t(), t}};
    for (std::size_t a = 0; a < y.size(); ++a) pt[syms_[a]] = y[a];
    State out(y.size());
    for (std::size_t a = 0; a < y.size(); ++a) {
      try {
        out[a] = eval(sys_.G[a], pt);
      } catch (const DomainError& e) {
        throw IntegrationError("right-hand side " + std::to_string(a + 1) + " undefined at t = " +
                               std::to_string(t) + ": " + e.what());
      }
    }
    return out;
  }

 private:
  const ReducedSystem& sys_;
  std::vector<Symbol> syms_;
};

State axpy(const State& y, double h, const State& k) {
  State out(y);
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += h * k[i];
  return out;
}

}  // namespace

Trajectory integrate_reduced(const ReducedSystem& sys, const IntegrationPlan& plan) {
  if (!(plan.step > 0.0) || !std::isfinite(plan.step)) throw IntegrationError("step must be positive");
  if (!std::isfinite(plan.t0) || !std::isfinite(plan.t1) || plan.t1 <= plan.t0) {
    throw IntegrationError("time span must be finite with t1 > t0");
  }
  if (plan.initial.size() != sys.G.size() || sys.params.size() != sys.G.size()) {
    throw IntegrationError("initial condition has " + std::to_string(plan.initial.size()) + " entries, system has " +
                           std::to_string(sys.G.size()));
  }
  const long n = std::max(1L, std::lround((plan.t1 - plan.t0) / plan.step));
  const double h = (plan.t1 - plan.t0) / static_cast<double>(n);

  const Rhs f(sys);
  Trajectory out;
  out.params = sys.params;
  out.t.reserve(static_cast<std::size_t>(n + 1));
  out.phi.reserve(static_cast<std::size_t>(n + 1));
  State y = plan.initial;
  out.t.push_back(plan.t0);
  out.phi.push_back(y);
  for (long i = 0; i < n; ++i) {
    const double t = plan.t0 + static_cast<double>(i) * h;
    const State k1 = f(t, y);
    const State k2 = f(t + h / 2, axpy(y, h / 2, k1));
    const State k3 = f(t + h / 2, axpy(y, h / 2, k2));
    const State k4 = f(t + h, axpy(y, h, k3));
    double norm2 = 0.0;
    for (std::size_t a = 0; a < y.size(); ++a) {
      y[a] += h / 6 * (k1[a] + 2 * k2[a] + 2 * k3[a] + k4[a]);
      norm2 += y[a] * y[a];
    }
    if (!std::isfinite(norm2) || std::sqrt(norm2) > plan.blowup) {
      throw IntegrationError("solution blew up near t = " + std::to_string(t + h));
    }
    out.t.push_back(plan.t0 + static_cast<double>(i + 1) * h);
    out.phi.push_back(y);
  }
  return out;
}

std::vector<std::vector<double>> seeded_initial_conditions(std::uint64_t seed, int rho, int count, double lo,
                                                           double hi) {
  std::uint64_t s = seed;
  std::vector<std::vector<double>> out(static_cast<std::size_t>(count), std::vector<double>(static_cast<std::size_t>(rho)));
  for (auto& ic : out) {
    for (auto& v : ic) v = lo + (hi - lo) * static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
  }
  return out;
}

PdeResidual pde_residual(const EvolutionEquation& eq, const Ansatz& ansatz, const Trajectory& traj,
                         const std::vector<double>& probe_xs, int min_probes) {
  const std::size_t n = traj.t.size();
  if (n < 5) throw IntegrationError("trajectory too short for central differences");
  const double h = traj.t[1] - traj.t[0];
  const int order = std::max(0, max_x_order(eq.rhs()));

  std::vector<Expr> fk;
  for (int k = 0; k <= order; ++k) fk.push_back(ansatz.F_x(k));

  auto point_at = [&](std::size_t i, double x) {
    Point pt{{Symbol::t(), traj.t[i]}, {Symbol::x(), x}};
    for (int b = 0; b < ansatz.rho(); ++b) pt[ansatz.param(b)] = traj.phi[i][static_cast<std::size_t>(b)];
    return pt;
  };

  PdeResidual out;
  for (double x : probe_xs) {
    try {
      std::vector<double> u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = eval(fk[0], point_at(i, x));
      double worst = 0.0, worst_t = 0.0;
      for (std::size_t i = 2; i + 2 < n; ++i) {
        const double ut = (-u[i + 2] + 8 * u[i + 1] - 8 * u[i - 1] + u[i - 2]) / (12 * h);
        Point pt = point_at(i, x);
        Point jet{{Symbol::t(), traj.t[i]}, {Symbol::x(), x}};
        for (int k = 0; k <= order; ++k) jet[Symbol::u(k)] = eval(fk[static_cast<std::size_t>(k)], pt);
        const double r = std::abs(ut - eval(eq.rhs(), jet));
        if (r > worst) {
          worst = r;
          worst_t = traj.t[i];
        }
      }
      ++out.valid_probes;
      if (worst >= out.max_residual) {
        out.max_residual = worst;
        out.worst_t = worst_t;
        out.worst_x = x;
      }
    } catch (const DomainError&) {
      ++out.skipped_probes;
    }
  }
  if (out.valid_probes < min_probes) {
    throw IntegrationError("only " + std::to_string(out.valid_probes) + " valid probe points, need " +
                           std::to_string(min_probes));
  }
  return out;
}

}  // namespace gcs
