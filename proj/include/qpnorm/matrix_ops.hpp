#pragma once

#include <limits>
#include <vector>

#include "qpnorm/types.hpp"

namespace qpnorm {

inline constexpr double inf_p = std::numeric_limits<double>::infinity();

/// E_jk: single 1 at row j, column k of a d x d zero matrix.
Matrix matrix_unit(Eigen::Index j, Eigen::Index k, Eigen::Index d);

/// Pauli matrix sigma_k, k in 0..3 (sigma_0 = I).
Matrix pauli(int k);

/// Orthonormal qubit operator basis {sigma_k / sqrt(2)}.
std::vector<Matrix> pauli_basis();

/// p-norm of the singular value vector; p = inf_p gives the operator
/// norm. Rejects p < 1.
double schatten_norm(const Matrix& a, double p);

/// PSD square root of A^dagger A.
Matrix abs_matrix(const Matrix& a);

/// Kronecker product, row-major block layout:
/// entry (i*rB + r, j*cB + c) = A(i,j) * B(r,c).
Matrix kron(const Matrix& a, const Matrix& b);

/// Blocks M_jk of a matrix on a d x d' tensor space, row-major (j,k)
/// order: Gamma = sum_jk E_jk (x) M_jk.
std::vector<Matrix> block_decompose(const Matrix& gamma, Eigen::Index d);

/// Coefficients W_m of Gamma = sum_m G_m (x) W_m for an orthonormal
/// operator basis {G_m} on the first factor. Rejects non-orthonormal
/// bases (Hilbert-Schmidt Gram defect above 1e-10).
std::vector<Matrix> basis_decompose(const Matrix& gamma, const std::vector<Matrix>& basis);

/// Traces out one tensor factor (which_factor = 1 or 2) of a matrix on
/// a d1 x d2 tensor space.
Matrix partial_trace(const Matrix& gamma, int which_factor, Eigen::Index d1, Eigen::Index d2);

struct PsdVerdict {
  bool is_psd;
  double min_eigenvalue;
};

/// PSD test for a Hermitian matrix: true iff lambda_min >= -tol.
PsdVerdict psd_check(const Matrix& a, double tol);

/// Hilbert-Schmidt inner product Tr A^dagger B.
Complex hs_inner(const Matrix& a, const Matrix& b);

/// Row-major vectorization: vec(A)(i*cols + j) = A(i,j).
Vector vec_rm(const Matrix& a);
Matrix unvec_rm(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Singular values, descending.
RealVector singular_values(const Matrix& a);

/// Eigenvalues of a Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const Matrix& a);

}  // namespace qpnorm
