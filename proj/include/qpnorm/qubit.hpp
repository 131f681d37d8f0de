#pragma once

#include <utility>

#include "qpnorm/channel.hpp"

namespace qpnorm {

/// A = z0 I + (w + i u) . sigma for a 2x2 matrix; w, u real 3-vectors.
struct BlochDecomposition {
  Complex z0;
  Vector3 w;
  Vector3 u;
};

BlochDecomposition bloch_decompose(const Matrix& a);
Matrix bloch_compose(const BlochDecomposition& b);

/// Pauli-basis parameters of a qubit CP map:
///   Phi(z0 I + z.sigma) = scale [ (z0 + s.z) I + (z0 t + T z).sigma ].
/// scale = Tr Phi(I) / 2 normalizes the identity component; it is 1 for
/// trace-preserving maps. TP iff s = 0 (and scale = 1); unital iff t = 0.
struct QubitMapParams {
  Vector3 s;
  Vector3 t;
  Matrix3 tmat;
  double scale = 1.0;
};

QubitMapParams qubit_map_params(const Channel& phi);

/// Channel with the given Pauli-basis action. Throws
/// InvalidChannelError when the parameters do not give a CP map.
Channel channel_from_qubit_params(const QubitMapParams& p);

/// Canonical form: T = R_out T' R_in^T with proper rotations and T'
/// diagonal with real, sign-carrying entries lambda_k; t and s rotate
/// alongside. The represented map is unitarily equivalent to the input.
struct CanonicalForm {
  QubitMapParams params;
  Matrix3 rot_out;
  Matrix3 rot_in;
};

CanonicalForm canonicalize(const QubitMapParams& p);

/// Eigenvalues of A^dagger A for A = I + (w + i u).sigma, closed form:
/// 1 + |z|^2 +- 2 sqrt(|w|^2 + |w|^2 |u|^2 - (u.w)^2). Returned
/// (larger, smaller).
std::pair<double, double> gram_eigenvalues_closed(const Vector3& w, const Vector3& u);

/// Eigenvalues of Phi(A)^dagger Phi(A) for a trace-preserving qubit map
/// (s = 0) and A = I + (w + i u).sigma, closed form in t, T.
std::pair<double, double> output_gram_eigenvalues_tp(const QubitMapParams& p, const Vector3& w,
                                                     const Vector3& u);

/// Same for general s (and scale): with m = t + Tw, n = Tu,
/// alpha = 1 + s.w, beta = s.u, S^2 = alpha^2 + beta^2, the eigenvalues
/// are scale^2 [ S^2 + |m|^2 + |n|^2
///              +- 2 sqrt(|alpha m + beta n|^2 + |m x n|^2) ].
std::pair<double, double> output_gram_eigenvalues(const QubitMapParams& p, const Vector3& w,
                                                  const Vector3& u);

/// (Tr |A|)^2 for A = I + (w + i u).sigma:
/// 2 (1 + |z|^2 + sqrt((1 - |w|^2 + |u|^2)^2 + 4 (u.w)^2)).
double trace_norm_squared_closed(const Vector3& w, const Vector3& u);

/// f(x) = |x + a|^m + |x - a|^m, nondecreasing in x and a for x > 0,
/// a >= 0, m >= 1.
double f_mono(double x, double a, double m);

/// g(x) = f(x)^{2/m} / x^2, nonincreasing in x under the same ranges.
double g_mono(double x, double a, double m);

struct StrongIneqResult {
  double lhs;
  double rhs;
  bool holds;
};

/// Pointwise comparison ||Phi(A)||_p^2 / ||A||_1^2 against the same
/// ratio at I + what.sigma, what = w/|w| from A's Bloch vector
/// ((0,0,1) when w = 0). Proven for trace-preserving qubit maps at
/// p >= 2; for 1 <= p < 2 the computation is exploratory only and must
/// be requested explicitly.
StrongIneqResult verify_strong_inequality(const Channel& phi, const Matrix& a, double p,
                                          bool exploratory = false);

}  // namespace qpnorm
