#include "qpnorm/matrix_ops.hpp"

#include <cmath>

namespace qpnorm {

Matrix matrix_unit(Eigen::Index j, Eigen::Index k, Eigen::Index d) {
  if (d <= 0) throw std::invalid_argument("matrix_unit: dimension must be positive");
  if (j < 0 || j >= d || k < 0 || k >= d)
    throw std::invalid_argument("matrix_unit: index out of range");
  Matrix e = Matrix::Zero(d, d);
  e(j, k) = 1.0;
  return e;
}

Matrix pauli(int k) {
  Matrix s(2, 2);
  const Complex i(0.0, 1.0);
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return s;
}

std::vector<Matrix> pauli_basis() {
  std::vector<Matrix> basis;
  basis.reserve(4);
  for (int k = 0; k < 4; ++k) basis.push_back(pauli(k) / std::sqrt(2.0));
  return basis;
}

RealVector singular_values(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

RealVector hermitian_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double schatten_norm(const Matrix& a, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p must be >= 1");
  if (!is_finite(a)) throw std::invalid_argument("schatten_norm: non-finite entries");
  if (p == 2.0) return a.norm();  // Frobenius
  const RealVector sv = singular_values(a);
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  if (top <= 0.0) return 0.0;
  if (std::isinf(p)) return top;
  // Factor out the top singular value so large p cannot underflow the sum.
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv(i) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

Matrix abs_matrix(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("abs_matrix: input not square");
  if (!is_finite(a)) throw std::invalid_argument("abs_matrix: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.adjoint() * a);
  RealVector lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<Matrix> block_decompose(const Matrix& gamma, Eigen::Index d) {
  if (gamma.rows() != gamma.cols()) throw std::invalid_argument("block_decompose: input not square");
  if (d <= 0 || gamma.rows() % d != 0)
    throw std::invalid_argument("block_decompose: side not divisible by first-factor dimension");
  const Eigen::Index dp = gamma.rows() / d;
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(d * d));
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k)
      blocks.push_back(gamma.block(j * dp, k * dp, dp, dp));
  return blocks;
}

std::vector<Matrix> basis_decompose(const Matrix& gamma, const std::vector<Matrix>& basis) {
  if (basis.empty()) throw std::invalid_argument("basis_decompose: empty basis");
  const Eigen::Index d = basis.front().rows();
  if (gamma.rows() != gamma.cols() || gamma.rows() % d != 0)
    throw std::invalid_argument("basis_decompose: dimension mismatch");
  for (std::size_t m = 0; m < basis.size(); ++m)
    for (std::size_t n = 0; n < basis.size(); ++n) {
      const Complex g = hs_inner(basis[m], basis[n]);
      const double expect = (m == n) ? 1.0 : 0.0;
      if (std::abs(g - expect) > tol::basis_orthonormal)
        throw std::invalid_argument("basis_decompose: basis not orthonormal");
    }
  const Eigen::Index dp = gamma.rows() / d;
  std::vector<Matrix> coeffs;
  coeffs.reserve(basis.size());
  for (const Matrix& g : basis) {
    // W_m = Tr_1 (G_m^dagger (x) I) Gamma
    Matrix w = Matrix::Zero(dp, dp);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k)
        w += std::conj(g(k, j)) * gamma.block(k * dp, j * dp, dp, dp);
    coeffs.push_back(std::move(w));
  }
  return coeffs;
}

Matrix partial_trace(const Matrix& gamma, int which_factor, Eigen::Index d1, Eigen::Index d2) {
  if (gamma.rows() != gamma.cols() || gamma.rows() != d1 * d2)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (which_factor == 1) {
    Matrix out = Matrix::Zero(d2, d2);
    for (Eigen::Index j = 0; j < d1; ++j) out += gamma.block(j * d2, j * d2, d2, d2);
    return out;
  }
  if (which_factor == 2) {
    Matrix out = Matrix::Zero(d1, d1);
    for (Eigen::Index m = 0; m < d1; ++m)
      for (Eigen::Index n = 0; n < d1; ++n) {
        Complex acc = 0.0;
        for (Eigen::Index k = 0; k < d2; ++k) acc += gamma(m * d2 + k, n * d2 + k);
        out(m, n) = acc;
      }
    return out;
  }
  throw std::invalid_argument("partial_trace: which_factor must be 1 or 2");
}

PsdVerdict psd_check(const Matrix& a, double tol) {
  const RealVector lam = hermitian_eigenvalues(hermitian_part(a));
  const double lo = lam.minCoeff();
  return {lo >= -tol, lo};
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  return (a.adjoint() * b).trace();
}

Vector vec_rm(const Matrix& a) {
  Vector v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

Matrix unvec_rm(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec_rm: size mismatch");
  Matrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

}  // namespace qpnorm
