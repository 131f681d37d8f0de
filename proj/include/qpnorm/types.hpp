#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qpnorm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

// Central tolerances. PSD checks are relative to the largest
// |eigenvalue|: Choi matrices of valid channels pick up O(1e-14)
// negative dust from eigendecomposition.
namespace tol {
inline constexpr double hermitian_defect_max = 1e-9;
inline constexpr double psd = 1e-10;
inline constexpr double unit_trace = 1e-12;
inline constexpr double unit_norm = 1e-12;
inline constexpr double tp_check = 1e-9;
inline constexpr double kraus_rank_cut = 1e-10;  // relative to top Choi eigenvalue
inline constexpr double unitary_check = 1e-10;
inline constexpr double basis_orthonormal = 1e-10;
}  // namespace tol

/// Channel-like input that fails CP/TP validation (as opposed to input
/// that is structurally malformed, which throws std::invalid_argument).
class InvalidChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor-space size guard tripped (superoperators capped at 81x81).
class DimensionCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_finite(const Matrix& m);

inline Matrix hermitian_part(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

/// Square matrix symmetrized to (A + A^dagger)/2 at construction.
/// Inputs with symmetrization defect above 1e-9 are rejected; the
/// defect actually removed is recorded.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& a);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double symmetrization_defect() const { return defect_; }

 private:
  Matrix entries_;
  double defect_ = 0.0;
};

/// PSD, unit-trace Hermitian matrix (a quantum state).
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& a);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double min_eigenvalue() const { return min_eig_; }

 private:
  Matrix entries_;
  double min_eig_ = 0.0;
};

/// Unit-norm complex amplitude vector.
class PureState {
 public:
  explicit PureState(const Vector& amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(const Vector& amplitudes);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Matrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Vector amplitudes_;
};

}  // namespace qpnorm
