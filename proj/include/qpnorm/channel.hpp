#pragma once

#include <vector>

#include "qpnorm/matrix_ops.hpp"
#include "qpnorm/types.hpp"

namespace qpnorm {

/// Completely positive map stored canonically as a Kraus set
/// Phi(rho) = sum_a K_a rho K_a^dagger. CP holds by construction; the
/// trace-preserving flag is validated eagerly when set.
class Channel {
 public:
  explicit Channel(std::vector<Matrix> kraus, bool trace_preserving = false);

  Eigen::Index dim_in() const { return dim_in_; }
  Eigen::Index dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  bool trace_preserving() const { return trace_preserving_; }

  /// sum_a K_a A K_a^dagger.
  Matrix apply(const Matrix& a) const;

  /// Adjoint action sum_a K_a^dagger B K_a (Hilbert-Schmidt adjoint).
  Matrix apply_adjoint(const Matrix& b) const;

  /// The adjoint map as a channel (Kraus set {K_a^dagger}).
  Channel adjoint() const;

 private:
  std::vector<Matrix> kraus_;
  Eigen::Index dim_in_ = 0;
  Eigen::Index dim_out_ = 0;
  bool trace_preserving_ = false;
};

/// PSD block matrix with blocks Phi(E_jk), side dim_in * dim_out.
struct ChoiMatrix {
  Eigen::Index dim_in;
  Eigen::Index dim_out;
  Matrix entries;
};

/// Matrix of Phi in the {E_jk} operator basis under row-major
/// vectorization: entries * vec(A) = vec(Phi(A)); column (j,k) holds
/// vec(Phi(E_jk)). Equals sum_a K_a (x) conj(K_a).
struct SuperopMatrix {
  Eigen::Index dim_in;
  Eigen::Index dim_out;
  Matrix entries;
};

ChoiMatrix choi_of(const Channel& phi);

/// Channel from an eigendecomposed Choi matrix; eigenvalues below
/// rank_tol_rel times the top eigenvalue are dropped. Throws
/// InvalidChannelError when the input is not PSD beyond tolerance.
Channel kraus_from_choi(const ChoiMatrix& choi, double rank_tol_rel = tol::kraus_rank_cut,
                        bool trace_preserving = false);

SuperopMatrix superop_matrix(const Channel& phi);

/// Choi matrix rebuilt from a superoperator matrix (columns are
/// vec(Phi(E_jk))).
ChoiMatrix choi_from_superop(const SuperopMatrix& s);

/// Kraus set {K_a (x) L_b}.
Channel tensor_channel(const Channel& phi, const Channel& omega);

bool is_cp(const Channel& phi, double tol = tol::psd);
bool is_tp(const Channel& phi, double tol = tol::tp_check);
bool is_unital(const Channel& phi, double tol = tol::tp_check);

/// sum_a K_a^dagger K_a (identity iff trace-preserving).
Matrix kraus_gram_in(const Channel& phi);

/// sum_a K_a K_a^dagger (identity iff unital).
Matrix kraus_gram_out(const Channel& phi);

}  // namespace qpnorm
