// Dense complex-matrix substrate: register states, tensor products,
// partial traces and eigenvalue extraction used by every other module.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace qsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Full density matrices are capped at 12 qubits (4096 x 4096 complex).
inline constexpr int kMaxQubits = 12;

// Numeric tolerances for state validity.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kNormTol = 1e-12;

/// Thrown when a numeric invariant (trace, positivity, convergence, ...) fails.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Eigen::Index dim_for_qubits(int num_qubits) {
  return Eigen::Index{1} << num_qubits;
}

// Pauli and ladder operators.
Eigen::Matrix2cd identity2();
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd sigma_plus();   // |1><0|
Eigen::Matrix2cd sigma_minus();  // |0><1|

/// Unit-norm pure state of `num_qubits` qubits. Qubit 0 is the most
/// significant bit of the basis index.
class PureState {
 public:
  PureState(int num_qubits, ComplexVector amplitudes);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  int num_qubits_;
  ComplexVector amplitudes_;
};

/// Density matrix of a qubit register. Construction checks shape only;
/// validate() checks the Hermiticity / trace / positivity contract.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, ComplexMatrix matrix);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double trace_real() const { return matrix_.trace().real(); }
  double purity() const;

  /// Throws NumericError unless Hermitian within 1e-10, unit trace within
  /// 1e-10 and min eigenvalue >= psd_floor.
  void validate(double psd_floor = kPsdFloor) const;

 private:
  int num_qubits_;
  ComplexMatrix matrix_;
};

/// Kronecker product; (A⊗B)[(i*db+k),(j*db+l)] = A[i,j]·B[k,l].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduce onto the qubits in `keep` (strictly increasing indices).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Real spectrum of a Hermitian matrix, descending. Throws if the input is
/// not Hermitian within 1e-10.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

/// Full spectrum of an arbitrary square matrix, unordered.
std::vector<Complex> eigenvalues_general(const ComplexMatrix& m);

/// max |m[i,j] - conj(m[j,i])|
double hermiticity_error(const ComplexMatrix& m);

}  // namespace qsim
