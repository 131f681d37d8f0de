#include "qpnorm/qubit.hpp"

#include <cmath>

namespace qpnorm {
namespace {

Matrix sigma_dot(const Vector3& w, const Vector3& u) {
  Matrix out = Matrix::Zero(2, 2);
  for (int k = 0; k < 3; ++k) out += Complex(w(k), u(k)) * pauli(k + 1);
  return out;
}

}  // namespace

BlochDecomposition bloch_decompose(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2)
    throw std::invalid_argument("bloch_decompose: matrix must be 2x2");
  BlochDecomposition b;
  b.z0 = 0.5 * a.trace();
  for (int k = 0; k < 3; ++k) {
    const Complex zk = 0.5 * (pauli(k + 1) * a).trace();
    b.w(k) = zk.real();
    b.u(k) = zk.imag();
  }
  return b;
}

Matrix bloch_compose(const BlochDecomposition& b) {
  return b.z0 * Matrix::Identity(2, 2) + sigma_dot(b.w, b.u);
}

QubitMapParams qubit_map_params(const Channel& phi) {
  if (phi.dim_in() != 2 || phi.dim_out() != 2)
    throw std::invalid_argument("qubit_map_params: channel must be 2 -> 2");
  QubitMapParams p;
  const BlochDecomposition bi = bloch_decompose(phi.apply(Matrix::Identity(2, 2)));
  p.scale = bi.z0.real();
  if (!(p.scale > 0.0))
    throw std::invalid_argument("qubit_map_params: Tr Phi(I) must be positive");
  p.t = bi.w / p.scale;
  for (int k = 0; k < 3; ++k) {
    const BlochDecomposition bk = bloch_decompose(phi.apply(pauli(k + 1)));
    p.s(k) = bk.z0.real() / p.scale;
    p.tmat.col(k) = bk.w / p.scale;
  }
  return p;
}

Channel channel_from_qubit_params(const QubitMapParams& p) {
  const Matrix eye = Matrix::Identity(2, 2);
  const Matrix phi_i = p.scale * (eye + sigma_dot(p.t, Vector3::Zero()));
  Matrix phi_s[3];
  for (int k = 0; k < 3; ++k)
    phi_s[k] = p.scale * (p.s(k) * eye + sigma_dot(p.tmat.col(k), Vector3::Zero()));
  const Complex i1(0.0, 1.0);
  // E_00 = (I + s3)/2, E_01 = (s1 + i s2)/2, E_10 = (s1 - i s2)/2,
  // E_11 = (I - s3)/2.
  Matrix s(4, 4);
  s.col(0) = vec_rm(0.5 * (phi_i + phi_s[2]));
  s.col(1) = vec_rm(0.5 * (phi_s[0] + i1 * phi_s[1]));
  s.col(2) = vec_rm(0.5 * (phi_s[0] - i1 * phi_s[1]));
  s.col(3) = vec_rm(0.5 * (phi_i - phi_s[2]));
  const bool tp = p.s.norm() <= 1e-10 && std::abs(p.scale - 1.0) <= 1e-10;
  return kraus_from_choi(choi_from_superop({2, 2, std::move(s)}), tol::kraus_rank_cut, tp);
}

CanonicalForm canonicalize(const QubitMapParams& p) {
  Eigen::JacobiSVD<Matrix3> svd(p.tmat, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix3 rot_out = svd.matrixU();
  Matrix3 rot_in = svd.matrixV();
  const double du = rot_out.determinant();
  const double dv = rot_in.determinant();
  rot_out.col(2) *= du;  // keep rotations proper; signs move into lambda
  rot_in.col(2) *= dv;
  Vector3 lambda = svd.singularValues();
  lambda(2) *= du * dv;
  CanonicalForm out;
  out.params.tmat = lambda.asDiagonal();
  out.params.t = rot_out.transpose() * p.t;
  out.params.s = rot_in.transpose() * p.s;
  out.params.scale = p.scale;
  out.rot_out = rot_out;
  out.rot_in = rot_in;
  return out;
}

std::pair<double, double> gram_eigenvalues_closed(const Vector3& w, const Vector3& u) {
  const double z2 = w.squaredNorm() + u.squaredNorm();
  const double inside =
      w.squaredNorm() + w.squaredNorm() * u.squaredNorm() - std::pow(u.dot(w), 2);
  const double r = 2.0 * std::sqrt(std::max(inside, 0.0));
  return {1.0 + z2 + r, 1.0 + z2 - r};
}

std::pair<double, double> output_gram_eigenvalues_tp(const QubitMapParams& p, const Vector3& w,
                                                     const Vector3& u) {
  if (p.s.norm() > 1e-10 || std::abs(p.scale - 1.0) > 1e-10)
    throw std::invalid_argument(
        "output_gram_eigenvalues_tp: map is not trace-preserving; use the general variant");
  const Vector3 m = p.t + p.tmat * w;
  const Vector3 n = p.tmat * u;
  const double inside =
      m.squaredNorm() * (1.0 + n.squaredNorm()) - std::pow(m.dot(n), 2);
  const double base = 1.0 + m.squaredNorm() + n.squaredNorm();
  const double r = 2.0 * std::sqrt(std::max(inside, 0.0));
  return {base + r, base - r};
}

std::pair<double, double> output_gram_eigenvalues(const QubitMapParams& p, const Vector3& w,
                                                  const Vector3& u) {
  const double alpha = 1.0 + p.s.dot(w);
  const double beta = p.s.dot(u);
  const Vector3 m = p.t + p.tmat * w;
  const Vector3 n = p.tmat * u;
  const double s2 = alpha * alpha + beta * beta;
  const double inside = (alpha * m + beta * n).squaredNorm() + m.cross(n).squaredNorm();
  const double base = s2 + m.squaredNorm() + n.squaredNorm();
  const double r = 2.0 * std::sqrt(std::max(inside, 0.0));
  const double c2 = p.scale * p.scale;
  return {c2 * (base + r), c2 * (base - r)};
}

double trace_norm_squared_closed(const Vector3& w, const Vector3& u) {
  const double z2 = w.squaredNorm() + u.squaredNorm();
  const double inner = 1.0 - w.squaredNorm() + u.squaredNorm();
  return 2.0 * (1.0 + z2 + std::sqrt(inner * inner + 4.0 * std::pow(u.dot(w), 2)));
}

double f_mono(double x, double a, double m) {
  return std::pow(std::abs(x + a), m) + std::pow(std::abs(x - a), m);
}

double g_mono(double x, double a, double m) {
  return std::pow(f_mono(x, a, m), 2.0 / m) / (x * x);
}

StrongIneqResult verify_strong_inequality(const Channel& phi, const Matrix& a, double p,
                                          bool exploratory) {
  if (!(p >= 1.0)) throw std::invalid_argument("verify_strong_inequality: p must be >= 1");
  if (p < 2.0 && !exploratory)
    throw std::invalid_argument(
        "verify_strong_inequality: p < 2 must be requested as exploratory");
  if (phi.dim_in() != 2 || phi.dim_out() != 2 || !is_tp(phi))
    throw std::invalid_argument(
        "verify_strong_inequality: channel must be a trace-preserving qubit map");
  const BlochDecomposition b = bloch_decompose(a);
  if (std::abs(b.z0) <= 1e-12)
    throw std::invalid_argument(
        "verify_strong_inequality: input must have a nonzero identity component");
  // Normalize to I + (w + i u).sigma; norm ratios are invariant.
  Vector3 w, u;
  for (int k = 0; k < 3; ++k) {
    const Complex zk = Complex(b.w(k), b.u(k)) / b.z0;
    w(k) = zk.real();
    u(k) = zk.imag();
  }
  Vector3 what(0.0, 0.0, 1.0);
  if (w.norm() > 1e-14) what = w / w.norm();
  // The comparison point is I + what.sigma with the sign of what chosen
  // so the output shift aligns with T what; the anti-aligned sign can
  // dip below the left side, which is not what the monotonicity bound
  // controls.
  const QubitMapParams params = qubit_map_params(phi);
  if (params.t.dot(params.tmat * what) < 0.0) what = -what;

  const double lhs = std::pow(schatten_norm(phi.apply(a), p) / schatten_norm(a, 1.0), 2);
  const Matrix ref = Matrix::Identity(2, 2) + sigma_dot(what, Vector3::Zero());
  const double rhs = std::pow(schatten_norm(phi.apply(ref), p) / schatten_norm(ref, 1.0), 2);
  return {lhs, rhs, lhs <= rhs + 1e-10};
}

}  // namespace qpnorm
