// Entanglement quantities: purity-route global entanglement, Wootters
// concurrence, its even-N generalization, and the tangle routes built
// from them.
#pragma once

#include "qsim/matrix.hpp"

#include <vector>

namespace qsim {

/// Split of the register's information content into local and non-local
/// parts; i_total = i_local + i_nonlocal holds identically for pure states.
struct InformationBudget {
  double i_total;
  double i_local;
  double i_nonlocal;
};

/// Purity-route global entanglement of a pure state:
/// (2/N) sum_i (1 - Tr rho_i^2). Defined for pure states only.
double mw_global_entanglement(const PureState& psi);

InformationBudget information_budget(const PureState& psi);

/// Wootters concurrence of a two-qubit density matrix: the lambdas are the
/// square roots of the spectrum of rho (sy⊗sy) rho* (sy⊗sy).
double concurrence_2q(const DensityMatrix& rho);

/// Even-N concurrence C_N = max{lambda_1 - sum_{i>=2} lambda_i, 0} with the
/// lambdas taken from R_N = rho sy^{⊗N} rho* sy^{⊗N} (Wootters convention).
double n_concurrence(const DensityMatrix& rho);

/// Global entanglement of a permutation-symmetric register from one pair
/// reduction: (n_total - 1) * concurrence^2.
double ge_w_tangle_route(const DensityMatrix& rho_pair, int n_total);

/// Global entanglement through the N-tangle: n_concurrence^2.
double ge_ghz_tangle_route(const DensityMatrix& rho);

namespace detail {
/// Wootters lambdas computed literally from the R-matrix spectrum,
/// descending. Used by concurrence_2q and as the small-N cross-check for
/// the scalable route inside n_concurrence.
std::vector<double> wootters_lambdas_spectral(const DensityMatrix& rho);
}  // namespace detail

}  // namespace qsim
