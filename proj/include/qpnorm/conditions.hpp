#pragma once

#include <optional>

#include "qpnorm/channel.hpp"
#include "qpnorm/norms.hpp"

namespace qpnorm {

/// Matrix of the PSD operator Phi^adj o Phi in the matrix-unit basis:
/// entry ((i,k),(j,l)) = Tr Phi(E_ik)^dagger Phi(E_jl), with row-major
/// pair flattening (i,k) -> i*d + k.
struct ConditionMatrix {
  Eigen::Index d;
  Matrix entries;
};

/// Condition matrix in the basis F_jk = U E_jk U^dagger. U must be
/// unitary within 1e-10; pass the identity for the standard basis.
ConditionMatrix condition_matrix(const Channel& phi, const Matrix& u);

struct ConditionCheck {
  bool holds;
  double min_entry;  // smallest real part over all entries
  double max_imag;   // largest |imaginary part|
};

/// Entrywise-nonnegativity test of the condition matrix: holds iff
/// every entry has real part >= -tol and |imaginary part| <= tol.
ConditionCheck check_postr(const Channel& phi, const Matrix& u, double tol);

/// True iff every Choi entry has real part >= -tol and |imag| <= tol.
/// Sufficient for the condition test at U = I, not necessary.
bool choi_entrywise_nonneg(const Channel& phi, double tol);

struct BasisSearchResult {
  Matrix best_unitary;
  double min_entry;
  bool holds;
  double penalty;  // sum of squared negative-real and imaginary parts
};

inline OptimizerConfig basis_search_defaults() {
  OptimizerConfig cfg;
  cfg.restarts = 8;
  cfg.max_iters = 500;
  return cfg;
}

/// Heuristic search for a unitary basis change making every condition
/// matrix entry nonnegative. Multi-start local descent on U(d)
/// parametrized as exp(i H), H Hermitian; the first start is the
/// identity. Failure to find such a U is not a certificate that none
/// exists.
BasisSearchResult search_basis(const Channel& phi, const OptimizerConfig& cfg = basis_search_defaults(),
                               double tol = 1e-9);

/// Parameters of the structured map family
///   [Phi(M)]_jj = sum_l D(j,l) M_ll,
///   [Phi(M)]_jk = a_jk (x_jk + i eps_jk y_jk)   (j != k, M_jk = x + i y):
/// D entrywise nonnegative, a Hermitian with zero diagonal, eps
/// symmetric with +-1 entries. Trace-preserving iff D is column
/// stochastic.
struct FormParams {
  RealMatrix d_matrix;
  Matrix a_offdiag;
  RealMatrix epsilon;
};

/// Action of the structured family on the matrix unit E_jl.
Matrix form_action_on_unit(const FormParams& params, Eigen::Index j, Eigen::Index l);

/// Tests whether the channel acts by the structured family above and
/// extracts its parameters; eps_jk is set to +1 by convention where
/// a_jk vanishes. Returns nothing when the structure fails beyond tol.
std::optional<FormParams> recognize_form(const Channel& phi, double tol = 1e-9);

}  // namespace qpnorm
