#include "qsim/closed_form.hpp"

#include <bit>
#include <cmath>

namespace qsim {

namespace {

void check_n(int n, const char* who) {
  if (n < 2) {
    throw std::invalid_argument(std::string(who) + ": qubit count must be >= 2");
  }
}

void check_p(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": p must lie in [0,1]");
  }
}

// Argument of the max{...,0} in the noisy W-state curve.
double noisy_bracket(int n, double p) {
  const double a = 4.0 * p * p;
  const double b = std::sqrt(1.0 - p * p) *
                   std::sqrt(static_cast<double>(n) * n - (p * n - 4.0 * p) * (p * n - 4.0 * p));
  return a - b;
}

}  // namespace

DensityMatrix w_pair_density(ChannelKind kind, int n_total, double p) {
  check_n(n_total, "w_pair_density");
  check_p(p, "w_pair_density");
  const double n = static_cast<double>(n_total);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  switch (kind) {
    case ChannelKind::Dissipative:
      m(0, 0) = (n - 2.0 * p) / n;
      m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = p / n;
      break;
    case ChannelKind::Dephasing:
      m(0, 0) = (n - 2.0) / n;
      m(1, 1) = m(2, 2) = 1.0 / n;
      m(1, 2) = m(2, 1) = p / n;
      break;
    case ChannelKind::Noisy: {
      const double p2 = p * p;
      const double wpair = 2.0 / n;
      const double wrest = (n - 2.0) / n;
      m(0, 0) = wpair * (1.0 - p2) / 4.0 + wrest * (1.0 + p) * (1.0 + p) / 4.0;
      m(1, 1) = m(2, 2) = wpair * (1.0 + p2) / 4.0 + wrest * (1.0 - p2) / 4.0;
      m(3, 3) = wpair * (1.0 - p2) / 4.0 + wrest * (1.0 - p) * (1.0 - p) / 4.0;
      m(1, 2) = m(2, 1) = wpair * p2 / 2.0;
      break;
    }
  }
  return DensityMatrix(2, std::move(m));
}

std::vector<double> ghz_diagonal_weights(ChannelKind kind, int num_qubits, double p) {
  check_n(num_qubits, "ghz_diagonal_weights");
  check_p(p, "ghz_diagonal_weights");
  if (kind == ChannelKind::Dephasing) {
    throw std::invalid_argument("ghz_diagonal_weights: defined for dissipative/noisy only");
  }
  std::vector<double> lam(num_qubits + 1);
  for (int z = 0; z <= num_qubits; ++z) {
    if (kind == ChannelKind::Dissipative) {
      // 0^0 = 1: the all-zeros branch survives only at z = 0.
      lam[z] = std::pow(p, z) * std::pow(1.0 - p, num_qubits - z) + (z == 0 ? 1.0 : 0.0);
    } else {
      lam[z] = (std::pow(1.0 + p, z) * std::pow(1.0 - p, num_qubits - z) +
                std::pow(1.0 - p, z) * std::pow(1.0 + p, num_qubits - z)) /
               std::pow(2.0, num_qubits);
    }
  }
  return lam;
}

DensityMatrix ghz_density(ChannelKind kind, int num_qubits, double p) {
  check_n(num_qubits, "ghz_density");
  check_p(p, "ghz_density");
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("ghz_density: qubit count above 12");
  }
  const Eigen::Index dim = dim_for_qubits(num_qubits);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);

  const double coherence =
      (kind == ChannelKind::Noisy) ? std::pow(p, num_qubits)
                                   : std::pow(p, 0.5 * num_qubits);
  m(0, dim - 1) = m(dim - 1, 0) = 0.5 * coherence;

  if (kind == ChannelKind::Dephasing) {
    m(0, 0) = m(dim - 1, dim - 1) = 0.5;
  } else {
    const auto lam = ghz_diagonal_weights(kind, num_qubits, p);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
      const int z = std::popcount(static_cast<unsigned long long>(idx));
      m(idx, idx) = 0.5 * lam[z];
    }
  }
  return DensityMatrix(num_qubits, std::move(m));
}

double w_ge_closed(ChannelKind kind, int n_total, double gamma_t) {
  check_n(n_total, "w_ge_closed");
  if (gamma_t < 0.0) {
    throw std::invalid_argument("w_ge_closed: gamma_t must be nonnegative");
  }
  const double n = static_cast<double>(n_total);
  const double p = std::exp(-gamma_t);
  if (kind == ChannelKind::Noisy) {
    const double br = std::max(noisy_bracket(n_total, p), 0.0);
    return (n - 1.0) / (4.0 * n * n) * br * br;
  }
  return 4.0 * (n - 1.0) / (n * n) * p * p;
}

double ghz_ge_dephasing_closed(int num_qubits, double gamma_t) {
  check_n(num_qubits, "ghz_ge_dephasing_closed");
  if (gamma_t < 0.0) {
    throw std::invalid_argument("ghz_ge_dephasing_closed: gamma_t must be nonnegative");
  }
  return std::exp(-num_qubits * gamma_t);
}

double t_sep_noisy_w(int n_total, double gamma) {
  check_n(n_total, "t_sep_noisy_w");
  if (gamma <= 0.0) {
    throw std::invalid_argument("t_sep_noisy_w: gamma must be positive");
  }
  if (noisy_bracket(n_total, 1.0) <= 0.0) {
    throw NumericError("t_sep_noisy_w: curve not positive at t = 0");
  }
  // The bracket is strictly decreasing in gamma*t; bisect for its root.
  double lo = 0.0;
  double hi = 1.0;
  while (noisy_bracket(n_total, std::exp(-hi)) > 0.0) hi *= 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (noisy_bracket(n_total, std::exp(-mid)) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi / gamma;
}

}  // namespace qsim
