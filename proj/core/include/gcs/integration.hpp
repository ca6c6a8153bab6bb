#pragma once

// Fixed-step RK4 integration of reduced systems and the finite-difference
// check that recomposed solutions satisfy the original equation.

#include <cstdint>
#include <vector>

#include "gcs/equation.hpp"
#include "gcs/numeric.hpp"
#include "gcs/reduction.hpp"

namespace gcs {

struct IntegrationPlan {
  double step = 1e-3;
  double t0 = 0.0;
  double t1 = 0.05;
  std::vector<double> initial;
  double blowup = 1e8;
};

struct Trajectory {
  std::vector<std::string> params;
  std::vector<double> t;
  std::vector<std::vector<double>> phi;  // phi[i][a]
};

// Classical RK4 with the step shrunk so that an integer number of steps
// lands exactly on t1. Throws IntegrationError on blow-up, a domain error in
// G, or an invalid plan.
Trajectory integrate_reduced(const ReducedSystem& sys, const IntegrationPlan& plan);

// `count` initial vectors with entries in [lo, hi], reproducible from seed.
std::vector<std::vector<double>> seeded_initial_conditions(std::uint64_t seed, int rho, int count, double lo = -1.0,
                                                           double hi = 1.0);

struct PdeResidual {
  double max_residual = 0.0;
  int valid_probes = 0;
  int skipped_probes = 0;
  double worst_t = 0.0;
  double worst_x = 0.0;
};

// u(t, x) = F(t, x, phi(t)); u_t by 4th-order central differences on the
// trajectory grid, x-derivatives from d^k F/dx^k. Probes hitting a domain
// error are skipped; throws IntegrationError when fewer than `min_probes`
// remain or the trajectory is too short.
PdeResidual pde_residual(const EvolutionEquation& eq, const Ansatz& ansatz, const Trajectory& traj,
                         const std::vector<double>& probe_xs, int min_probes = 5);

}  // namespace gcs
