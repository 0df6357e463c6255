#include "qsim/channels.hpp"

#include <cmath>

namespace qsim {

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Dissipative: return "dissipative";
    case ChannelKind::Dephasing: return "dephasing";
    case ChannelKind::Noisy: return "noisy";
  }
  throw std::invalid_argument("to_string: bad ChannelKind");
}

ChannelKind parse_channel_kind(const std::string& name) {
  if (name == "dissipative") return ChannelKind::Dissipative;
  if (name == "dephasing") return ChannelKind::Dephasing;
  if (name == "noisy") return ChannelKind::Noisy;
  throw std::invalid_argument("unknown channel kind: " + name);
}

double LindbladSpec::total_rate() const {
  double sum = 0.0;
  for (const auto& j : jumps) sum += j.rate;
  return sum;
}

SingleQubitKraus kraus_for(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("kraus_for: p must lie in [0,1]");
  }
  SingleQubitKraus out{kind, p, {}};
  const double sp = std::sqrt(p);
  switch (kind) {
    case ChannelKind::Dissipative: {
      Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
      k0(0, 0) = 1.0;
      k0(1, 1) = sp;
      out.operators = {k0, std::sqrt(1.0 - p) * sigma_minus()};
      break;
    }
    case ChannelKind::Dephasing: {
      Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
      k0(0, 0) = 1.0;
      k0(1, 1) = sp;
      Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
      k1(1, 1) = std::sqrt(1.0 - p);
      out.operators = {k0, k1};
      break;
    }
    case ChannelKind::Noisy: {
      const double c0 = std::sqrt((1.0 + 3.0 * p) / 4.0);
      const double c1 = std::sqrt((1.0 - p) / 4.0);
      out.operators = {c0 * identity2(), c1 * pauli_x(), c1 * pauli_y(), c1 * pauli_z()};
      break;
    }
  }
  return out;
}

namespace detail {

void local_left_mul(ComplexMatrix& m, const Eigen::Matrix2cd& k, int qubit,
                    int num_qubits) {
  const Eigen::Index dim = m.rows();
  const Eigen::Index mask = Eigen::Index{1} << (num_qubits - 1 - qubit);
  const Complex k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);
  // Column-major storage: walk each column and mix its row pairs in place.
  for (Eigen::Index c = 0; c < dim; ++c) {
    Complex* col = m.col(c).data();
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r & mask) continue;
      const Complex a = col[r];
      const Complex b = col[r | mask];
      col[r] = k00 * a + k01 * b;
      col[r | mask] = k10 * a + k11 * b;
    }
  }
}

void local_right_mul_adjoint(ComplexMatrix& m, const Eigen::Matrix2cd& k, int qubit,
                             int num_qubits) {
  const Eigen::Index dim = m.rows();
  const Eigen::Index mask = Eigen::Index{1} << (num_qubits - 1 - qubit);
  ComplexVector col0(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (c & mask) continue;
    const Eigen::Index c1 = c | mask;
    col0 = m.col(c);
    m.col(c) = col0 * std::conj(k(0, 0)) + m.col(c1) * std::conj(k(0, 1));
    m.col(c1) = col0 * std::conj(k(1, 0)) + m.col(c1) * std::conj(k(1, 1));
  }
}

}  // namespace detail

DensityMatrix apply_local_channel(const DensityMatrix& rho, const SingleQubitKraus& k,
                                  int qubit) {
  if (qubit < 0 || qubit >= rho.num_qubits()) {
    throw std::out_of_range("apply_local_channel: qubit index out of range");
  }
  ComplexMatrix acc = ComplexMatrix::Zero(rho.dim(), rho.dim());
  ComplexMatrix tmp(rho.dim(), rho.dim());
  for (const auto& op : k.operators) {
    tmp = rho.matrix();
    detail::local_left_mul(tmp, op, qubit, rho.num_qubits());
    detail::local_right_mul_adjoint(tmp, op, qubit, rho.num_qubits());
    acc += tmp;
  }
  return DensityMatrix(rho.num_qubits(), std::move(acc));
}

DensityMatrix apply_uniform_channel(const DensityMatrix& rho, const SingleQubitKraus& k) {
  DensityMatrix out = rho;
  for (int q = 0; q < rho.num_qubits(); ++q) {
    out = apply_local_channel(out, k, q);
  }
  return out;
}

LindbladSpec lindblad_generator(ChannelKind kind, double gamma) {
  if (gamma < 0.0) {
    throw std::invalid_argument("lindblad_generator: rate must be nonnegative");
  }
  switch (kind) {
    case ChannelKind::Dissipative:
      return {{{sigma_minus(), gamma}}};
    case ChannelKind::Dephasing:
      // sigma+ sigma- = |1><1|
      return {{{sigma_plus() * sigma_minus(), gamma}}};
    case ChannelKind::Noisy:
      return {{{pauli_x(), gamma / 4.0}, {pauli_y(), gamma / 4.0}, {pauli_z(), gamma / 4.0}}};
  }
  throw std::invalid_argument("lindblad_generator: bad ChannelKind");
}

LindbladSpec lindblad_generator_literal_noisy(double gamma) {
  if (gamma < 0.0) {
    throw std::invalid_argument("lindblad_generator_literal_noisy: rate must be nonnegative");
  }
  return {{{sigma_minus(), gamma}, {sigma_plus(), gamma}}};
}

}  // namespace qsim
