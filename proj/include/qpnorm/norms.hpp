#pragma once

#include <cstdint>
#include <vector>

#include "qpnorm/channel.hpp"

namespace qpnorm {

/// Multi-start optimizer knobs. Results are deterministic for a fixed
/// seed and config: per-restart RNG streams derive from
/// (seed, restart_index) and aggregation is an associative max, so
/// scheduling cannot change the outcome.
struct OptimizerConfig {
  int restarts = 64;
  int max_iters = 2000;
  double step_tol = 1e-12;
  double value_tol = 1e-10;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

struct NormResult {
  double value = 0.0;
  Vector argmax_state;   // optimizing pure state (maximal p-norm path)
  Matrix argmax_matrix;  // optimizing matrix (q->p norm path)
  int restarts_agreeing = 0;
  bool converged = false;
};

/// Maximal output p-norm: sup of ||Phi(psi psi^dag)||_p over pure
/// states, by multi-start projected gradient ascent on the amplitude
/// sphere. The value is a certified lower bound reported as the
/// estimate. p = 1 is evaluated exactly as the top eigenvalue of
/// Phi^adj(I).
NormResult nu_p(const Channel& phi, double p, const OptimizerConfig& cfg = {});

enum class Domain { self_adjoint, unrestricted };

/// sup ||Phi(A)||_p / ||A||_q over the chosen domain, by multi-start
/// ascent on the q-norm unit sphere.
NormResult norm_q_to_p(const Channel& phi, double q, double p, Domain domain,
                       const OptimizerConfig& cfg = {});

/// ||Phi||_{2->2} exactly: the largest singular value of the
/// superoperator matrix. No optimization.
double norm_2_to_2_exact(const Channel& phi);

struct MultRatioResult {
  double ratio = 0.0;
  double nu_a = 0.0;
  double nu_b = 0.0;
  double nu_ab = 0.0;
  Vector witness;  // best pure input found on the tensor space
  bool converged = false;
};

/// nu_p(Phi (x) Omega) / (nu_p(Phi) nu_p(Omega)). The product of the
/// single-channel maximizers is polished as an extra restart, so the
/// ratio cannot fall measurably below 1.
MultRatioResult mult_ratio(const Channel& phi, const Channel& omega, double p,
                           const OptimizerConfig& cfg = {});

struct SingularBasis {
  std::vector<Matrix> basis;    // orthonormal input-space operators, mu descending
  RealVector singular_values;  // mu_m >= 0
  bool self_adjoint;           // every basis element Hermitian within 1e-10
};

/// Orthonormal operator basis diagonalizing Phi^adj o Phi, with the
/// singular values of Phi. Within degenerate eigenspaces the basis is
/// re-symmetrized so each element is self-adjoint whenever possible.
SingularBasis singular_basis(const Channel& phi);

struct BellObstruction {
  Matrix n;
  bool is_psd;
  double trace_norm;
};

/// Worked 2x2 example: the trace-norm weight matrix N built from the
/// Bell state in the Pauli basis fails to be PSD and has Tr|N| > 1, so
/// the tensor-norm argument cannot close in a general singular basis.
BellObstruction bell_obstruction();

}  // namespace qpnorm
