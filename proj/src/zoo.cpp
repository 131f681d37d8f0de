#include "qpnorm/zoo.hpp"

#include <cmath>

#include "qpnorm/qubit.hpp"
#include "qpnorm/random.hpp"

namespace qpnorm {

Channel identity_channel(Eigen::Index d) {
  if (d <= 0) throw std::invalid_argument("identity_channel: dimension must be positive");
  return Channel({Matrix::Identity(d, d)}, true);
}

Channel diagonal_map(const Matrix& a) {
  const HermitianMatrix ah(a);
  const Eigen::Index d = ah.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(ah.entries());
  const RealVector lam = es.eigenvalues();
  const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
  if (lam.minCoeff() < -tol::psd * scale)
    throw std::invalid_argument("diagonal_map: coefficient matrix not PSD");
  // A = L^dag L with L = sqrt(Lambda) V^dag; the conjugated rows of L
  // give diagonal Kraus operators with sum K E_jk K^dag = a_jk E_jk.
  std::vector<Matrix> kraus;
  bool tp = true;
  for (Eigen::Index j = 0; j < d; ++j)
    if (std::abs(ah.entries()(j, j).real() - 1.0) > tol::tp_check) tp = false;
  for (Eigen::Index m = 0; m < d; ++m) {
    if (lam(m) <= tol::kraus_rank_cut * scale) continue;
    Matrix k = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      k(j, j) = std::sqrt(lam(m)) * es.eigenvectors()(j, m);  // conj of L(m, j)
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) throw std::invalid_argument("diagonal_map: zero coefficient matrix");
  return Channel(std::move(kraus), tp);
}

Channel qc_map(const RealMatrix& d_stochastic) {
  const Eigen::Index d = d_stochastic.rows();
  if (d_stochastic.cols() != d || d <= 0)
    throw std::invalid_argument("qc_map: matrix must be square");
  for (Eigen::Index l = 0; l < d; ++l) {
    double col = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (d_stochastic(j, l) < -1e-12)
        throw std::invalid_argument("qc_map: negative entry");
      col += d_stochastic(j, l);
    }
    if (std::abs(col - 1.0) > 1e-12)
      throw std::invalid_argument("qc_map: matrix not column stochastic");
  }
  std::vector<Matrix> kraus;
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index l = 0; l < d; ++l)
      if (d_stochastic(j, l) > 0.0) {
        Matrix k = Matrix::Zero(d, d);
        k(j, l) = std::sqrt(d_stochastic(j, l));
        kraus.push_back(std::move(k));
      }
  return Channel(std::move(kraus), true);
}

Channel werner_holevo(Eigen::Index d) {
  if (d < 2) throw std::invalid_argument("werner_holevo: dimension must be >= 2");
  const double c = 1.0 / std::sqrt(static_cast<double>(d - 1));
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(d * (d - 1) / 2));
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a + 1; b < d; ++b) {
      Matrix k = Matrix::Zero(d, d);
      k(a, b) = c;
      k(b, a) = -c;
      kraus.push_back(std::move(k));
    }
  return Channel(std::move(kraus), true);
}

FormMapResult form_map(const FormParams& params) {
  const Eigen::Index d = params.d_matrix.rows();
  if (d <= 0 || params.d_matrix.cols() != d || params.a_offdiag.rows() != d ||
      params.a_offdiag.cols() != d || params.epsilon.rows() != d || params.epsilon.cols() != d)
    throw std::invalid_argument("form_map: inconsistent parameter dimensions");
  for (Eigen::Index j = 0; j < d; ++j) {
    if (std::abs(params.a_offdiag(j, j)) > 1e-12)
      throw std::invalid_argument("form_map: a matrix must have zero diagonal");
    for (Eigen::Index l = 0; l < d; ++l) {
      if (params.d_matrix(j, l) < -1e-12)
        throw std::invalid_argument("form_map: D entries must be nonnegative");
      if (std::abs(params.a_offdiag(j, l) - std::conj(params.a_offdiag(l, j))) > 1e-12)
        throw std::invalid_argument("form_map: a matrix must be Hermitian");
      if (std::abs(std::abs(params.epsilon(j, l)) - 1.0) > 1e-12 ||
          std::abs(params.epsilon(j, l) - params.epsilon(l, j)) > 1e-12)
        throw std::invalid_argument("form_map: epsilon must be symmetric with +-1 entries");
    }
  }
  Matrix s(d * d, d * d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index l = 0; l < d; ++l)
      s.col(j * d + l) = vec_rm(form_action_on_unit(params, j, l));
  const ChoiMatrix choi = choi_from_superop({d, d, std::move(s)});
  const RealVector lam = hermitian_eigenvalues(hermitian_part(choi.entries));
  FormMapResult res;
  res.choi_min_eigenvalue = lam.minCoeff();
  const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
  if (res.choi_min_eigenvalue < -tol::psd * scale) return res;

  bool tp = true;
  for (Eigen::Index l = 0; l < d; ++l)
    if (std::abs(params.d_matrix.col(l).sum() - 1.0) > 1e-9) tp = false;
  res.channel = kraus_from_choi(choi, tol::kraus_rank_cut, tp);
  return res;
}

Channel depolarizing(Eigen::Index d, double lambda) {
  if (d <= 0) throw std::invalid_argument("depolarizing: dimension must be positive");
  const double dd = static_cast<double>(d);
  const double lo = -1.0 / (dd * dd - 1.0);
  if (!(lambda >= lo - 1e-12) || !(lambda <= 1.0 + 1e-12))
    throw std::invalid_argument("depolarizing: lambda outside the CP range");
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) {
      choi.block(j * d, k * d, d, d) = lambda * matrix_unit(j, k, d);
      if (j == k) choi.block(j * d, k * d, d, d) += (1.0 - lambda) / dd * Matrix::Identity(d, d);
    }
  return kraus_from_choi({d, d, std::move(choi)}, tol::kraus_rank_cut, true);
}

Channel extreme_cp(const Matrix& a) {
  if (a.rows() <= 0 || a.cols() <= 0 || !is_finite(a))
    throw std::invalid_argument("extreme_cp: invalid matrix");
  if (a.cwiseAbs().maxCoeff() == 0.0) throw std::invalid_argument("extreme_cp: zero matrix");
  return Channel({a});
}

Channel random_channel(Eigen::Index d_in, Eigen::Index d_out, int kraus_count,
                       std::uint64_t seed) {
  if (d_in <= 0 || d_out <= 0 || kraus_count <= 0)
    throw std::invalid_argument("random_channel: dimensions and count must be positive");
  if (d_out * kraus_count < d_in)
    throw std::invalid_argument(
        "random_channel: need kraus_count * d_out >= d_in for a trace-preserving map");
  Rng rng(seed);
  std::vector<Matrix> kraus;
  kraus.reserve(kraus_count);
  for (int a = 0; a < kraus_count; ++a) kraus.push_back(ginibre(rng, d_out, d_in));
  Matrix gram = Matrix::Zero(d_in, d_in);
  for (const Matrix& k : kraus) gram.noalias() += k.adjoint() * k;
  // Right-normalize: K -> K gram^{-1/2} makes sum K^dag K = I.
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const Matrix inv_sqrt = es.eigenvectors() *
                          es.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse().asDiagonal() *
                          es.eigenvectors().adjoint();
  for (Matrix& k : kraus) k = k * inv_sqrt;
  return Channel(std::move(kraus), true);
}

Channel qubit_canonical(const Vector3& t, const Vector3& lambda) {
  QubitMapParams p;
  p.s = Vector3::Zero();
  p.t = t;
  p.tmat = lambda.asDiagonal();
  p.scale = 1.0;
  return channel_from_qubit_params(p);
}

}  // namespace qpnorm
