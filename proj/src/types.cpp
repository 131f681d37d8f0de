#include "qpnorm/types.hpp"

#include <cmath>

namespace qpnorm {

bool is_finite(const Matrix& m) {
  return m.array().isFinite().all();
}

HermitianMatrix::HermitianMatrix(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("HermitianMatrix: input not square");
  if (!is_finite(a)) throw std::invalid_argument("HermitianMatrix: non-finite entries");
  defect_ = 0.5 * (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (defect_ > tol::hermitian_defect_max)
    throw std::invalid_argument("HermitianMatrix: symmetrization defect above 1e-9");
  entries_ = hermitian_part(a);
}

DensityMatrix::DensityMatrix(const Matrix& a) {
  HermitianMatrix h(a);
  entries_ = h.entries();
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  min_eig_ = es.eigenvalues().minCoeff();
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (min_eig_ < -tol::psd * scale)
    throw std::invalid_argument("DensityMatrix: not positive semi-definite");
  if (std::abs(entries_.trace().real() - 1.0) > tol::unit_trace ||
      std::abs(entries_.trace().imag()) > tol::unit_trace)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
}

PureState::PureState(const Vector& amplitudes) : amplitudes_(amplitudes) {
  if (amplitudes_.size() == 0) throw std::invalid_argument("PureState: empty vector");
  if (!amplitudes_.array().isFinite().all())
    throw std::invalid_argument("PureState: non-finite amplitudes");
  if (std::abs(amplitudes_.norm() - 1.0) > tol::unit_norm)
    throw std::invalid_argument("PureState: not unit norm");
}

PureState PureState::normalized(const Vector& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("PureState: cannot normalize zero or non-finite vector");
  return PureState(Vector(amplitudes / n));
}

}  // namespace qpnorm
