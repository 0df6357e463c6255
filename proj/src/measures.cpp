#include "qsim/measures.hpp"

#include "qsim/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace qsim {

namespace {

constexpr double kImagTol = 1e-8;
// Spectrum entries below these floors are numerical noise on rank-deficient
// states; sqrt would amplify them from ~1e-16 to ~1e-8 otherwise.
constexpr double kSpectrumFloorAbs = 1e-14;
constexpr double kSpectrumFloorRel = 1e-12;

double qubit_purity(const DensityMatrix& rho, int qubit) {
  std::array<int, 1> keep{qubit};
  return partial_trace(rho, std::span<const int>(keep)).purity();
}

// S M* S for S = sy^{⊗N} and even N: S|q> = (+-1)|~q> up to a global
// i^N, so the conjugation reduces to index reversal and bit-parity signs.
ComplexMatrix spin_flip_conjugate(const ComplexMatrix& m) {
  const Eigen::Index dim = m.rows();
  ComplexMatrix out(dim, dim);
  auto sign = [](Eigen::Index idx) {
    return (std::popcount(static_cast<unsigned long long>(idx)) & 1) ? -1.0 : 1.0;
  };
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double si = sign(i);
    for (Eigen::Index j = 0; j < dim; ++j) {
      out(i, j) = si * sign(j) * std::conj(m(dim - 1 - i, dim - 1 - j));
    }
  }
  return out;
}

double assemble_concurrence(std::vector<double> lambdas) {
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  double c = lambdas.empty() ? 0.0 : lambdas[0];
  for (size_t i = 1; i < lambdas.size(); ++i) c -= lambdas[i];
  return std::max(c, 0.0);
}

}  // namespace

namespace detail {

std::vector<double> wootters_lambdas_spectral(const DensityMatrix& rho) {
  const int n = rho.num_qubits();
  ComplexMatrix flip = pauli_y();
  for (int q = 1; q < n; ++q) flip = tensor_product(flip, pauli_y());

  const ComplexMatrix r = rho.matrix() * flip * rho.matrix().conjugate() * flip;
  const auto mu = eigenvalues_general(r);

  double mu_max = 0.0;
  for (const auto& v : mu) mu_max = std::max(mu_max, v.real());
  const double floor = std::max(kSpectrumFloorAbs, kSpectrumFloorRel * mu_max);

  std::vector<double> lambdas;
  lambdas.reserve(mu.size());
  for (const auto& v : mu) {
    if (std::abs(v.imag()) > kImagTol) {
      throw NumericError("concurrence: R spectrum has imaginary part above 1e-8");
    }
    lambdas.push_back(v.real() < floor ? 0.0 : std::sqrt(v.real()));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return lambdas;
}

}  // namespace detail

double mw_global_entanglement(const PureState& psi) {
  const int n = psi.num_qubits();
  if (n < 2) {
    throw std::invalid_argument("mw_global_entanglement: need at least 2 qubits");
  }
  const DensityMatrix rho = density_from_pure(psi);
  double sum = 0.0;
  for (int q = 0; q < n; ++q) sum += 1.0 - qubit_purity(rho, q);
  return 2.0 / n * sum;
}

InformationBudget information_budget(const PureState& psi) {
  const int n = psi.num_qubits();
  const DensityMatrix rho = density_from_pure(psi);
  double local = 0.0;
  double nonlocal = 0.0;
  for (int q = 0; q < n; ++q) {
    const double pur = qubit_purity(rho, q);
    local += 2.0 * pur - 1.0;
    nonlocal += 2.0 * (1.0 - pur);
  }
  return {static_cast<double>(n), local, nonlocal};
}

double concurrence_2q(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) {
    throw std::invalid_argument("concurrence_2q: input must be a 2-qubit state");
  }
  return assemble_concurrence(detail::wootters_lambdas_spectral(rho));
}

double n_concurrence(const DensityMatrix& rho) {
  const int n = rho.num_qubits();
  if (n % 2 != 0) {
    throw std::invalid_argument("n_concurrence: defined for even qubit counts only");
  }
  if (hermiticity_error(rho.matrix()) > kHermTol) {
    throw NumericError("n_concurrence: input not Hermitian within 1e-10");
  }

  // The lambdas are the singular values of (S sqrt(rho)* S) sqrt(rho),
  // S = sy^{⊗N}: identical to the R-spectrum square roots for positive
  // semidefinite rho, but without a non-Hermitian eigensolve.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericError("n_concurrence: eigensolver failed to converge");
  }
  const auto& evals = solver.eigenvalues();
  const double floor = kSpectrumFloorRel * std::max(0.0, evals.maxCoeff());
  Eigen::VectorXd roots(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    roots(i) = evals(i) < floor ? 0.0 : std::sqrt(evals(i));
  }
  const ComplexMatrix sqrt_rho =
      solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
  const ComplexMatrix product = spin_flip_conjugate(sqrt_rho) * sqrt_rho;

  Eigen::BDCSVD<ComplexMatrix> svd(product);
  std::vector<double> lambdas(svd.singularValues().data(),
                              svd.singularValues().data() + svd.singularValues().size());
  return assemble_concurrence(std::move(lambdas));
}

double ge_w_tangle_route(const DensityMatrix& rho_pair, int n_total) {
  if (n_total < 2) {
    throw std::invalid_argument("ge_w_tangle_route: total qubit count must be >= 2");
  }
  const double c = concurrence_2q(rho_pair);
  return (n_total - 1) * c * c;
}

double ge_ghz_tangle_route(const DensityMatrix& rho) {
  const double c = n_concurrence(rho);
  return c * c;
}

}  // namespace qsim
