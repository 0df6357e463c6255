#include "qsim/integrator.hpp"

#include <cmath>

namespace qsim {

namespace {

constexpr double kStabilityBound = 0.01;

// out += sum_i sum_k rate_k [J rho J† - (J†J rho + rho J†J)/2] with each
// 2x2 operator lifted to qubit i. `tmp` is scratch of rho's shape.
void accumulate_rhs(const ComplexMatrix& rho, const LindbladSpec& spec, int num_qubits,
                    ComplexMatrix& out, ComplexMatrix& tmp) {
  for (const auto& jump : spec.jumps) {
    const Eigen::Matrix2cd jdj = jump.op.adjoint() * jump.op;
    const double g = jump.rate;
    for (int q = 0; q < num_qubits; ++q) {
      tmp = rho;
      detail::local_left_mul(tmp, jump.op, q, num_qubits);
      detail::local_right_mul_adjoint(tmp, jump.op, q, num_qubits);
      out += g * tmp;

      tmp = rho;
      detail::local_left_mul(tmp, jdj, q, num_qubits);
      out -= 0.5 * g * tmp;

      tmp = rho;  // jdj is Hermitian, so right-adjoint == right multiply
      detail::local_right_mul_adjoint(tmp, jdj, q, num_qubits);
      out -= 0.5 * g * tmp;
    }
  }
}

}  // namespace

IntegrationConfig::IntegrationConfig(double t_final_, int steps_)
    : t_final(t_final_), steps(steps_) {
  if (t_final < 0.0) {
    throw std::invalid_argument("IntegrationConfig: t_final must be nonnegative");
  }
  if (steps < 1) {
    throw std::invalid_argument("IntegrationConfig: steps must be positive");
  }
}

int IntegrationConfig::default_steps(double gamma, double t_final) {
  return std::max(1, static_cast<int>(std::ceil(1000.0 * gamma * t_final)));
}

ComplexMatrix lindbladian_apply(const DensityMatrix& rho, const LindbladSpec& spec) {
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  ComplexMatrix tmp(rho.dim(), rho.dim());
  accumulate_rhs(rho.matrix(), spec, rho.num_qubits(), out, tmp);
  return out;
}

DensityMatrix evolve(const DensityMatrix& rho0, const LindbladSpec& spec,
                     const IntegrationConfig& config, EvolveStats* stats) {
  const double h = config.step_size();
  if (h * spec.total_rate() > kStabilityBound + 1e-12) {
    throw std::invalid_argument(
        "evolve: step size times total jump rate exceeds the 0.01 stability margin");
  }

  const int n = rho0.num_qubits();
  const Eigen::Index dim = rho0.dim();
  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim);
  ComplexMatrix stage(dim, dim), tmp(dim, dim);

  for (int step = 0; step < config.steps; ++step) {
    k1.setZero();
    accumulate_rhs(rho, spec, n, k1, tmp);
    stage = rho + (0.5 * h) * k1;
    k2.setZero();
    accumulate_rhs(stage, spec, n, k2, tmp);
    stage = rho + (0.5 * h) * k2;
    k3.setZero();
    accumulate_rhs(stage, spec, n, k3, tmp);
    stage = rho + h * k3;
    k4.setZero();
    accumulate_rhs(stage, spec, n, k4, tmp);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  const double trace = rho.trace().real();
  if (stats != nullptr) {
    stats->trace_drift = std::abs(trace - 1.0);
  }
  rho /= trace;

  DensityMatrix out(n, std::move(rho));
  try {
    out.validate(/*psd_floor=*/-1e-8);
  } catch (const NumericError&) {
    throw NumericError("evolve: state invariants violated; step size too large");
  }
  return out;
}

}  // namespace qsim
