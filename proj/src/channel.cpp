#include "qpnorm/channel.hpp"

#include <cmath>

namespace qpnorm {

Channel::Channel(std::vector<Matrix> kraus, bool trace_preserving)
    : kraus_(std::move(kraus)), trace_preserving_(trace_preserving) {
  if (kraus_.empty()) throw std::invalid_argument("Channel: empty Kraus set");
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  if (dim_in_ <= 0 || dim_out_ <= 0) throw std::invalid_argument("Channel: empty Kraus operator");
  double frob2 = 0.0;
  for (const Matrix& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_)
      throw std::invalid_argument("Channel: inconsistent Kraus dimensions");
    if (!is_finite(k)) throw std::invalid_argument("Channel: non-finite Kraus entries");
    frob2 += k.squaredNorm();
  }
  if (frob2 == 0.0) throw std::invalid_argument("Channel: all Kraus operators are zero");
  if (trace_preserving_) {
    const Matrix g = kraus_gram_in(*this);
    if ((g - Matrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff() > tol::tp_check)
      throw InvalidChannelError("Channel: trace-preserving flag set but sum K^dag K != I");
  }
}

Matrix Channel::apply(const Matrix& a) const {
  if (a.rows() != dim_in_ || a.cols() != dim_in_)
    throw std::invalid_argument("Channel::apply: dimension mismatch");
  Matrix out = Matrix::Zero(dim_out_, dim_out_);
  for (const Matrix& k : kraus_) out.noalias() += k * a * k.adjoint();
  return out;
}

Matrix Channel::apply_adjoint(const Matrix& b) const {
  if (b.rows() != dim_out_ || b.cols() != dim_out_)
    throw std::invalid_argument("Channel::apply_adjoint: dimension mismatch");
  Matrix out = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& k : kraus_) out.noalias() += k.adjoint() * b * k;
  return out;
}

Channel Channel::adjoint() const {
  std::vector<Matrix> adj;
  adj.reserve(kraus_.size());
  for (const Matrix& k : kraus_) adj.push_back(k.adjoint());
  return Channel(std::move(adj));
}

ChoiMatrix choi_of(const Channel& phi) {
  const Eigen::Index d = phi.dim_in(), dp = phi.dim_out();
  Matrix choi = Matrix::Zero(d * dp, d * dp);
  // block (j,k) = Phi(E_jk) = sum_a (col j of K_a)(col k of K_a)^dagger
  for (const Matrix& k : phi.kraus())
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index l = 0; l < d; ++l)
        choi.block(j * dp, l * dp, dp, dp).noalias() += k.col(j) * k.col(l).adjoint();
  return {d, dp, std::move(choi)};
}

Channel kraus_from_choi(const ChoiMatrix& choi, double rank_tol_rel, bool trace_preserving) {
  const Eigen::Index d = choi.dim_in, dp = choi.dim_out;
  if (choi.entries.rows() != d * dp || choi.entries.cols() != d * dp)
    throw std::invalid_argument("kraus_from_choi: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(choi.entries));
  const RealVector lam = es.eigenvalues();
  const double top = lam.cwiseAbs().maxCoeff();
  if (lam.minCoeff() < -tol::psd * std::max(1.0, top))
    throw InvalidChannelError("kraus_from_choi: Choi matrix not PSD");
  const double cut = rank_tol_rel * std::max(top, 0.0);
  std::vector<Matrix> kraus;
  for (Eigen::Index m = lam.size() - 1; m >= 0; --m) {
    if (lam(m) <= cut || lam(m) <= 0.0) break;  // ascending order: done
    // Eigenvector blocks v_j in C^dp give K via K(o, j) = v(j*dp + o).
    const Vector v = es.eigenvectors().col(m) * std::sqrt(lam(m));
    Matrix k(dp, d);
    for (Eigen::Index j = 0; j < d; ++j) k.col(j) = v.segment(j * dp, dp);
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) throw InvalidChannelError("kraus_from_choi: zero map");
  return Channel(std::move(kraus), trace_preserving);
}

SuperopMatrix superop_matrix(const Channel& phi) {
  const Eigen::Index d = phi.dim_in(), dp = phi.dim_out();
  Matrix s = Matrix::Zero(dp * dp, d * d);
  for (const Matrix& k : phi.kraus()) s.noalias() += kron(k, k.conjugate());
  return {d, dp, std::move(s)};
}

ChoiMatrix choi_from_superop(const SuperopMatrix& s) {
  const Eigen::Index d = s.dim_in, dp = s.dim_out;
  Matrix choi(d * dp, d * dp);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index l = 0; l < d; ++l)
      choi.block(j * dp, l * dp, dp, dp) = unvec_rm(s.entries.col(j * d + l), dp, dp);
  return {d, dp, std::move(choi)};
}

Channel tensor_channel(const Channel& phi, const Channel& omega) {
  std::vector<Matrix> kraus;
  kraus.reserve(phi.kraus().size() * omega.kraus().size());
  for (const Matrix& k : phi.kraus())
    for (const Matrix& l : omega.kraus()) kraus.push_back(kron(k, l));
  return Channel(std::move(kraus), phi.trace_preserving() && omega.trace_preserving());
}

bool is_cp(const Channel& phi, double tol) {
  const ChoiMatrix c = choi_of(phi);
  const RealVector lam = hermitian_eigenvalues(hermitian_part(c.entries));
  return lam.minCoeff() >= -tol * std::max(1.0, lam.cwiseAbs().maxCoeff());
}

bool is_tp(const Channel& phi, double tol) {
  return (kraus_gram_in(phi) - Matrix::Identity(phi.dim_in(), phi.dim_in()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

bool is_unital(const Channel& phi, double tol) {
  if (phi.dim_in() != phi.dim_out()) return false;
  return (kraus_gram_out(phi) - Matrix::Identity(phi.dim_out(), phi.dim_out()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

Matrix kraus_gram_in(const Channel& phi) {
  Matrix g = Matrix::Zero(phi.dim_in(), phi.dim_in());
  for (const Matrix& k : phi.kraus()) g.noalias() += k.adjoint() * k;
  return g;
}

Matrix kraus_gram_out(const Channel& phi) {
  Matrix g = Matrix::Zero(phi.dim_out(), phi.dim_out());
  for (const Matrix& k : phi.kraus()) g.noalias() += k * k.adjoint();
  return g;
}

}  // namespace qpnorm
