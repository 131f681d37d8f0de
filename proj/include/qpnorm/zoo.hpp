#pragma once

#include <optional>

#include "qpnorm/channel.hpp"
#include "qpnorm/conditions.hpp"

namespace qpnorm {

Channel identity_channel(Eigen::Index d);

/// Map with only diagonal Kraus operators: Phi(E_jk) = a_jk E_jk for a
/// PSD matrix A. Trace-preserving iff every a_jj = 1.
Channel diagonal_map(const Matrix& a);

/// Projection onto the diagonal followed by a column-stochastic action
/// on the resulting probability vector. Kraus set {sqrt(d_jl) E_jl}.
Channel qc_map(const RealMatrix& d_stochastic);

/// Phi(M) = ((Tr M) I - M^T) / (d - 1); the standard counterexample
/// family for multiplicativity at large p. Kraus operators are the
/// antisymmetric generators (E_ab - E_ba)/sqrt(d-1), a < b.
Channel werner_holevo(Eigen::Index d);

struct FormMapResult {
  std::optional<Channel> channel;   // set iff the parameters give a CP map
  double choi_min_eigenvalue = 0.0;  // diagnostic, also on rejection
};

/// Builds the structured map for the given parameters and accepts it
/// only when its Choi matrix is PSD. Non-CP parameter sets are
/// reported, not repaired.
FormMapResult form_map(const FormParams& params);

/// Phi(rho) = lambda rho + (1 - lambda) (Tr rho) I / d. Accepts the
/// full CP range lambda in [-1/(d^2-1), 1].
Channel depolarizing(Eigen::Index d, double lambda);

/// Single-Kraus (extreme) CP map rho -> A rho A^dagger.
Channel extreme_cp(const Matrix& a);

/// Kraus operators drawn with independent complex-normal entries, then
/// right-normalized so sum K^dag K = I. Deterministic per seed.
Channel random_channel(Eigen::Index d_in, Eigen::Index d_out, int kraus_count, std::uint64_t seed);

/// Trace-preserving qubit map in canonical form: Bloch shift t and
/// diagonal scaling lambda. Rejects parameter sets whose Choi matrix
/// is not PSD.
Channel qubit_canonical(const Vector3& t, const Vector3& lambda);

}  // namespace qpnorm
