// Fixed-step RK4 integration of the master equation for the full
// register; the deliberately independent check on the Kraus route.
#pragma once

#include "qsim/channels.hpp"
#include "qsim/matrix.hpp"

namespace qsim {

struct IntegrationConfig {
  double t_final;
  int steps;

  IntegrationConfig(double t_final_, int steps_);

  double step_size() const { return steps == 0 ? 0.0 : t_final / steps; }

  /// ceil(1000 * gamma * t_final), at least 1.
  static int default_steps(double gamma, double t_final);
};

struct EvolveStats {
  double trace_drift = 0.0;  // |Tr rho - 1| before the final renormalization
};

/// d rho/dt with the per-qubit jump set lifted to every qubit. The result
/// is traceless and Hermitian up to roundoff.
ComplexMatrix lindbladian_apply(const DensityMatrix& rho, const LindbladSpec& spec);

/// Classical RK4 over config.steps uniform steps, trace-renormalized at the
/// end. Requires h * (summed jump rates) <= 0.01. The output must satisfy
/// the density-matrix contract with PSD floor -1e-8, else this throws.
DensityMatrix evolve(const DensityMatrix& rho0, const LindbladSpec& spec,
                     const IntegrationConfig& config, EvolveStats* stats = nullptr);

}  // namespace qsim
