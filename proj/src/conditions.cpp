#include "qpnorm/conditions.hpp"

#include <cmath>

#include "qpnorm/random.hpp"

namespace qpnorm {
namespace {

bool is_unitary(const Matrix& u, double tol) {
  return u.rows() == u.cols() &&
         (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

Matrix exp_i_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Hermitian matrix from d^2 real parameters: diagonal first, then
// (re, im) pairs over the upper triangle.
Matrix hermitian_from_params(const RealVector& x, Eigen::Index d) {
  Matrix h = Matrix::Zero(d, d);
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < d; ++j) h(j, j) = x(idx++);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) {
      h(j, k) = Complex(x(idx), x(idx + 1));
      h(k, j) = std::conj(h(j, k));
      idx += 2;
    }
  return h;
}

double postr_penalty(const Matrix& x) {
  double pen = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double re = x(i, j).real(), im = x(i, j).imag();
      if (re < 0.0) pen += re * re;
      pen += im * im;
    }
  return pen;
}

Matrix rotate_condition_matrix(const Matrix& x, const Matrix& u) {
  // Row-major pair flattening: vec(U E U^dag) = (U (x) conj(U)) vec(E),
  // so the rotated matrix is W^dag X W with W = U (x) conj(U).
  const Matrix w = kron(u, u.conjugate());
  return w.adjoint() * x * w;
}

}  // namespace

ConditionMatrix condition_matrix(const Channel& phi, const Matrix& u) {
  const Eigen::Index d = phi.dim_in();
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("condition_matrix: basis unitary has wrong dimension");
  if (!is_unitary(u, tol::unitary_check))
    throw std::invalid_argument("condition_matrix: basis matrix not unitary");
  const Matrix s = superop_matrix(phi).entries;
  Matrix x = s.adjoint() * s;
  if (!u.isIdentity(1e-15)) x = rotate_condition_matrix(x, u);
  return {d, std::move(x)};
}

ConditionCheck check_postr(const Channel& phi, const Matrix& u, double tol) {
  const ConditionMatrix cm = condition_matrix(phi, u);
  double min_re = std::numeric_limits<double>::infinity();
  double max_im = 0.0;
  for (Eigen::Index i = 0; i < cm.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < cm.entries.cols(); ++j) {
      min_re = std::min(min_re, cm.entries(i, j).real());
      max_im = std::max(max_im, std::abs(cm.entries(i, j).imag()));
    }
  return {min_re >= -tol && max_im <= tol, min_re, max_im};
}

bool choi_entrywise_nonneg(const Channel& phi, double tol) {
  const Matrix c = choi_of(phi).entries;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.cols(); ++j)
      if (c(i, j).real() < -tol || std::abs(c(i, j).imag()) > tol) return false;
  return true;
}

BasisSearchResult search_basis(const Channel& phi, const OptimizerConfig& cfg, double tol) {
  const Eigen::Index d = phi.dim_in();
  const Matrix s = superop_matrix(phi).entries;
  const Matrix x0 = s.adjoint() * s;
  const Eigen::Index nparams = d * d;

  const auto penalty_at = [&](const RealVector& x) {
    return postr_penalty(rotate_condition_matrix(x0, exp_i_hermitian(hermitian_from_params(x, d))));
  };

  RealVector best_x = RealVector::Zero(nparams);
  double best_pen = penalty_at(best_x);
  const int restarts = std::max(cfg.restarts, 1);
  for (int r = 0; r < restarts && best_pen > 1e-26; ++r) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(r) + 0xba51);
    RealVector x = RealVector::Zero(nparams);
    if (r > 0)
      for (Eigen::Index i = 0; i < nparams; ++i) x(i) = rng.normal();
    double pen = penalty_at(x);
    double step = 0.1;
    const double h = 1e-5;
    for (int iter = 0; iter < cfg.max_iters && pen > 1e-26; ++iter) {
      RealVector grad(nparams);
      for (Eigen::Index i = 0; i < nparams; ++i) {
        RealVector xp = x, xm = x;
        xp(i) += h;
        xm(i) -= h;
        grad(i) = (penalty_at(xp) - penalty_at(xm)) / (2.0 * h);
      }
      const double gn = grad.norm();
      if (gn <= 1e-14 * std::max(1.0, pen)) break;
      bool accepted = false;
      double trial = std::min(step * 2.0, 10.0);
      while (trial >= 1e-16) {
        RealVector cand = x - trial * grad;
        const double pc = penalty_at(cand);
        if (pc <= pen - 1e-4 * trial * gn * gn) {
          x = std::move(cand);
          pen = pc;
          step = trial;
          accepted = true;
          break;
        }
        trial *= 0.5;
      }
      if (!accepted) break;
    }
    // Axis pattern search: drills through the finite-difference noise
    // floor so near-feasible basins actually reach entrywise
    // nonnegativity.
    double hh = 0.5;
    while (hh >= 1e-9 && pen > 1e-26) {
      bool improved = false;
      for (Eigen::Index i = 0; i < nparams; ++i)
        for (double s : {1.0, -1.0}) {
          RealVector cand = x;
          cand(i) += s * hh;
          const double pc = penalty_at(cand);
          if (pc < pen) {
            x = std::move(cand);
            pen = pc;
            improved = true;
          }
        }
      if (!improved) hh *= 0.3;
    }
    if (pen < best_pen) {
      best_pen = pen;
      best_x = x;
    }
  }

  BasisSearchResult res;
  res.best_unitary = exp_i_hermitian(hermitian_from_params(best_x, d));
  const ConditionCheck check = check_postr(phi, res.best_unitary, tol);
  res.min_entry = check.min_entry;
  res.holds = check.holds;
  res.penalty = best_pen;
  return res;
}

Matrix form_action_on_unit(const FormParams& params, Eigen::Index j, Eigen::Index l) {
  const Eigen::Index d = params.d_matrix.rows();
  Matrix out = Matrix::Zero(d, d);
  if (j == l) {
    for (Eigen::Index m = 0; m < d; ++m) out(m, m) = params.d_matrix(m, l);
    return out;
  }
  const Complex a = params.a_offdiag(j, l);
  const double eps = params.epsilon(j, l);
  out(j, l) = 0.5 * a * (1.0 + eps);
  out(l, j) = 0.5 * std::conj(a) * (1.0 - eps);
  return out;
}

std::optional<FormParams> recognize_form(const Channel& phi, double tol) {
  if (phi.dim_in() != phi.dim_out())
    throw std::invalid_argument("recognize_form: input and output dimensions differ");
  const Eigen::Index d = phi.dim_in();
  FormParams params;
  params.d_matrix = RealMatrix::Zero(d, d);
  params.a_offdiag = Matrix::Zero(d, d);
  params.epsilon = RealMatrix::Ones(d, d);

  // Diagonal action: Phi(E_ll) must be diagonal with real entries.
  for (Eigen::Index l = 0; l < d; ++l) {
    const Matrix f = phi.apply(matrix_unit(l, l, d));
    for (Eigen::Index m = 0; m < d; ++m)
      for (Eigen::Index n = 0; n < d; ++n) {
        if (m != n && std::abs(f(m, n)) > tol) return std::nullopt;
        if (m == n && std::abs(f(m, m).imag()) > tol) return std::nullopt;
      }
    for (Eigen::Index m = 0; m < d; ++m) {
      const double val = f(m, m).real();
      if (val < -tol) return std::nullopt;
      params.d_matrix(m, l) = std::max(val, 0.0);
    }
  }

  // Off-diagonal action probed on E_jk + E_kj and i(E_jk - E_kj).
  const Complex i1(0.0, 1.0);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) {
      const Matrix fp = phi.apply(matrix_unit(j, k, d) + matrix_unit(k, j, d));
      const Matrix fq = phi.apply(i1 * (matrix_unit(j, k, d) - matrix_unit(k, j, d)));
      for (Eigen::Index m = 0; m < d; ++m)
        for (Eigen::Index n = 0; n < d; ++n) {
          if ((m == j && n == k) || (m == k && n == j)) continue;
          if (std::abs(fp(m, n)) > tol || std::abs(fq(m, n)) > tol) return std::nullopt;
        }
      const Complex a = fp(j, k);
      if (std::abs(fp(k, j) - std::conj(a)) > tol) return std::nullopt;
      if (std::abs(a) <= tol) {
        // a_jk = 0: epsilon unidentifiable, +1 by convention; the
        // skew probe must then vanish too.
        if (std::abs(fq(j, k)) > tol) return std::nullopt;
        continue;
      }
      const Complex eps_c = -i1 * fq(j, k) / a;
      const double eps = (eps_c.real() >= 0.0) ? 1.0 : -1.0;
      if (std::abs(fq(j, k) - i1 * eps * a) > tol) return std::nullopt;
      params.a_offdiag(j, k) = a;
      params.a_offdiag(k, j) = std::conj(a);
      params.epsilon(j, k) = eps;
      params.epsilon(k, j) = eps;
    }

  // Full linear action must match the reconstruction.
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index l = 0; l < d; ++l) {
      const Matrix expect = form_action_on_unit(params, j, l);
      if ((phi.apply(matrix_unit(j, l, d)) - expect).cwiseAbs().maxCoeff() > tol)
        return std::nullopt;
    }
  return params;
}

}  // namespace qpnorm
