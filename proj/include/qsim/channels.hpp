// Single-qubit decoherence channels: Kraus sets parameterized by
// p = exp(-gamma*t), their application to full registers, and the
// matching Lindblad jump-operator sets.
#pragma once

#include "qsim/matrix.hpp"

#include <string>
#include <vector>

namespace qsim {

enum class ChannelKind { Dissipative, Dephasing, Noisy };

std::string to_string(ChannelKind kind);
ChannelKind parse_channel_kind(const std::string& name);

/// One single-qubit channel at fixed p; operators satisfy sum K†K = I.
struct SingleQubitKraus {
  ChannelKind kind;
  double p;
  std::vector<Eigen::Matrix2cd> operators;
};

struct Jump {
  Eigen::Matrix2cd op;
  double rate;
};

/// Per-qubit generator: d rho/dt = sum_k rate_k (J rho J† - {J†J, rho}/2).
struct LindbladSpec {
  std::vector<Jump> jumps;

  double total_rate() const;
};

/// Canonical Kraus set for the channel kind at decoherence parameter p.
///   Dissipative: amplitude damping   K0 = diag(1,√p), K1 = √(1-p)|0><1|
///   Dephasing:   phase damping       K0 = diag(1,√p), K1 = diag(0,√(1-p))
///   Noisy:       depolarizing with Bloch factor p
SingleQubitKraus kraus_for(ChannelKind kind, double p);

/// rho' = sum_m (I⊗K_m⊗I) rho (I⊗K_m⊗I)† acting on one qubit.
DensityMatrix apply_local_channel(const DensityMatrix& rho, const SingleQubitKraus& k,
                                  int qubit);

/// The same channel applied to every qubit of the register.
DensityMatrix apply_uniform_channel(const DensityMatrix& rho, const SingleQubitKraus& k);

/// Jump set whose time-t propagation equals kraus_for(kind, exp(-gamma*t)).
LindbladSpec lindblad_generator(ChannelKind kind, double gamma);

/// Literal two-jump realization {sigma-, sigma+} of the noisy bath, kept
/// for comparison runs; its z-relaxation rate is twice its coherence-decay
/// rate, so it is NOT the generator of kraus_for(Noisy, p).
LindbladSpec lindblad_generator_literal_noisy(double gamma);

namespace detail {
// In-place rho <- (I⊗K⊗I) rho and rho <- rho (I⊗K⊗I)†, acting on `qubit`.
void local_left_mul(ComplexMatrix& m, const Eigen::Matrix2cd& k, int qubit, int num_qubits);
void local_right_mul_adjoint(ComplexMatrix& m, const Eigen::Matrix2cd& k, int qubit,
                             int num_qubits);
}  // namespace detail

}  // namespace qsim
