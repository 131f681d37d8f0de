#include "qpnorm/random.hpp"

#include <cmath>

namespace qpnorm {

double Rng::normal() {
  // Box-Muller; std::normal_distribution is implementation-defined.
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Matrix ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

Vector random_state(Rng& rng, Eigen::Index d) {
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

Matrix random_unitary(Rng& rng, Eigen::Index d) {
  const Matrix g = ginibre(rng, d, d);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double m = std::abs(rjj);
    q.col(j) *= (m > 0.0) ? rjj / m : Complex(1.0, 0.0);
  }
  return q;
}

Matrix random_psd(Rng& rng, Eigen::Index d) {
  const Matrix g = ginibre(rng, d, d);
  return g * g.adjoint();
}

Matrix random_hermitian(Rng& rng, Eigen::Index d) {
  const Matrix g = ginibre(rng, d, d);
  return hermitian_part(g);
}

}  // namespace qpnorm
