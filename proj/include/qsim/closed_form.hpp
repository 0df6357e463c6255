// Analytic results as directly evaluable functions: the evolved pair and
// register density matrices, the exact global-entanglement curves, and
// the separability time of the noisy W curve.
#pragma once

#include "qsim/channels.hpp"
#include "qsim/matrix.hpp"

#include <vector>

namespace qsim {

/// Exact two-qubit reduction of an N-qubit W state after uniform
/// decoherence at parameter p.
DensityMatrix w_pair_density(ChannelKind kind, int n_total, double p);

/// Exact N-qubit density matrix of a decohered GHZ state: two coherence
/// entries (p^{N/2} for dephasing/dissipative, p^N for noisy, times 1/2)
/// plus the diagonal weight structure.
DensityMatrix ghz_density(ChannelKind kind, int num_qubits, double p);

/// Diagonal weights of the decohered GHZ state keyed by the number of set
/// bits z in the basis string (Dissipative or Noisy only). Summed over all
/// 2^N strings the weights add to 2; the 1/2 prefactor restores unit trace.
std::vector<double> ghz_diagonal_weights(ChannelKind kind, int num_qubits, double p);

/// Exact W-state global entanglement at gamma*t:
///   dissipative/dephasing: 4(n-1)/n^2 * exp(-2 gamma t)
///   noisy: (n-1)/(4n^2) * max{4p^2 - sqrt(1-p^2) sqrt(n^2-(pn-4p)^2), 0}^2
double w_ge_closed(ChannelKind kind, int n_total, double gamma_t);

/// exp(-n * gamma t); valid for any qubit parity.
double ghz_ge_dephasing_closed(int num_qubits, double gamma_t);

/// Smallest t > 0 at which the noisy W-state curve reaches zero, located
/// by bisection to |delta(gamma t)| <= 1e-9.
double t_sep_noisy_w(int n_total, double gamma);

}  // namespace qsim
