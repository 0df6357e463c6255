#include "qsim/states.hpp"

#include <cmath>

namespace qsim {

namespace {
void check_range(int n, const char* who) {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument(std::string(who) + ": qubit count out of range [2,12]");
  }
}
}  // namespace

PureState ghz_state(int num_qubits) {
  check_range(num_qubits, "ghz_state");
  ComplexVector amps = ComplexVector::Zero(dim_for_qubits(num_qubits));
  const double a = 1.0 / std::sqrt(2.0);
  amps(0) = a;
  amps(amps.size() - 1) = a;
  return PureState(num_qubits, std::move(amps));
}

PureState w_state(int num_qubits) {
  check_range(num_qubits, "w_state");
  ComplexVector amps = ComplexVector::Zero(dim_for_qubits(num_qubits));
  const double a = 1.0 / std::sqrt(static_cast<double>(num_qubits));
  for (int q = 0; q < num_qubits; ++q) {
    amps(Eigen::Index{1} << (num_qubits - 1 - q)) = a;
  }
  return PureState(num_qubits, std::move(amps));
}

DensityMatrix density_from_pure(const PureState& psi) {
  const auto& v = psi.amplitudes();
  return DensityMatrix(psi.num_qubits(), v * v.adjoint());
}

}  // namespace qsim
