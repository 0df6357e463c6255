// Initial entangled states of the register.
#pragma once

#include "qsim/matrix.hpp"

namespace qsim {

/// (|0...0> + |1...1>)/sqrt(2), 2 <= n <= 12.
PureState ghz_state(int num_qubits);

/// Equal superposition of the single-excitation basis states, 2 <= n <= 12.
PureState w_state(int num_qubits);

/// rho = |psi><psi|
DensityMatrix density_from_pure(const PureState& psi);

}  // namespace qsim
