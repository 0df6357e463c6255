#include "qsim/matrix.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace qsim {

Eigen::Matrix2cd identity2() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd sigma_plus() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(1, 0) = 1;
  return m;
}

Eigen::Matrix2cd sigma_minus() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 1) = 1;
  return m;
}

PureState::PureState(int num_qubits, ComplexVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
    throw std::invalid_argument("PureState: qubit count out of range [1,12]");
  }
  if (amplitudes_.size() != dim_for_qubits(num_qubits_)) {
    throw std::invalid_argument("PureState: amplitude count != 2^n");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTol) {
    throw NumericError("PureState: norm deviates from 1 beyond 1e-12");
  }
}

DensityMatrix::DensityMatrix(int num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
  if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
    throw std::invalid_argument("DensityMatrix: qubit count out of range [1,12]");
  }
  const Eigen::Index d = dim_for_qubits(num_qubits_);
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw std::invalid_argument("DensityMatrix: matrix is not 2^n x 2^n");
  }
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

void DensityMatrix::validate(double psd_floor) const {
  if (hermiticity_error(matrix_) > kHermTol) {
    throw NumericError("DensityMatrix: not Hermitian within 1e-10");
  }
  if (std::abs(matrix_.trace() - Complex(1, 0)) > kTraceTol) {
    throw NumericError("DensityMatrix: trace deviates from 1 beyond 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < psd_floor) {
    throw NumericError("DensityMatrix: negative eigenvalue below PSD floor");
  }
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("tensor_product: inputs must be square");
  }
  return Eigen::kroneckerProduct(a, b);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) {
      throw std::out_of_range("partial_trace: qubit index out of range");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw std::invalid_argument("partial_trace: keep must be strictly increasing");
    }
  }

  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dk = dim_for_qubits(nk);
  const Eigen::Index dt = Eigen::Index{1} << nt;

  // Qubit q owns bit (n-1-q) of the full index; same MSB rule in the output.
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  const auto& m = rho.matrix();
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Eigen::Index base_i = 0, base_j = 0;
      for (int b = 0; b < nk; ++b) {
        const Eigen::Index bit = Eigen::Index{1} << (n - 1 - keep[b]);
        if ((r >> (nk - 1 - b)) & 1) base_i |= bit;
        if ((c >> (nk - 1 - b)) & 1) base_j |= bit;
      }
      Complex acc(0, 0);
      for (Eigen::Index t = 0; t < dt; ++t) {
        Eigen::Index extra = 0;
        for (int b = 0; b < nt; ++b) {
          if ((t >> b) & 1) extra |= Eigen::Index{1} << (n - 1 - traced[b]);
        }
        acc += m(base_i | extra, base_j | extra);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(nk, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  std::vector<int> k(keep);
  return partial_trace(rho, std::span<const int>(k));
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigenvalues_hermitian: input must be square");
  }
  if (hermiticity_error(m) > kHermTol) {
    throw NumericError("eigenvalues_hermitian: input not Hermitian within 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalues_hermitian: eigensolver failed to converge");
  }
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

std::vector<Complex> eigenvalues_general(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigenvalues_general: input must be square");
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalues_general: eigensolver failed to converge");
  }
  return {solver.eigenvalues().data(),
          solver.eigenvalues().data() + solver.eigenvalues().size()};
}

double hermiticity_error(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace qsim
