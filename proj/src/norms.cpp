#include "qpnorm/norms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qpnorm/random.hpp"

namespace qpnorm {
namespace {

int resolve_threads(const OptimizerConfig& cfg, int jobs) {
  int t = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return std::min(t, std::max(jobs, 1));
}

template <typename F>
void parallel_for(int n, int threads, F&& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// (sum lam_i^p)^{1/p} for a nonnegative vector, scaled so large p
// cannot underflow.
double pnorm_nonneg(const RealVector& lam, double p) {
  const double top = lam.maxCoeff();
  if (top <= 0.0) return 0.0;
  if (std::isinf(p)) return top;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) acc += std::pow(lam(i) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

constexpr double kArmijo = 1e-4;
constexpr double kStepMin = 1e-18;
constexpr double kStepMax = 1e3;
constexpr int kStallLimit = 8;

struct Candidate {
  double value = -1.0;
  Vector state;
  Matrix matrix;
  bool valid = false;
};

// ---------------------------------------------------------------------------
// nu_p ascent over pure states

struct PureObjective {
  const Channel& phi;
  double p;

  double value(const Vector& psi, Eigen::SelfAdjointEigenSolver<Matrix>& es) const {
    es.compute(phi.apply(psi * psi.adjoint()), Eigen::EigenvaluesOnly);
    return pnorm_nonneg(es.eigenvalues().cwiseMax(0.0), p);
  }

  // Riemannian gradient on the amplitude sphere; also returns the value.
  double value_and_grad(const Vector& psi, Vector& grad,
                        Eigen::SelfAdjointEigenSolver<Matrix>& es) const {
    es.compute(phi.apply(psi * psi.adjoint()));
    const RealVector lam = es.eigenvalues().cwiseMax(0.0);
    const double top = lam.maxCoeff();
    const double f = pnorm_nonneg(lam, p);
    Vector raw;
    if (top <= 0.0) {
      raw = Vector::Zero(psi.size());
    } else if (std::isinf(p)) {
      const Vector v = es.eigenvectors().col(lam.size() - 1);
      raw = phi.apply_adjoint(v * v.adjoint()) * psi;
    } else {
      RealVector wts(lam.size());
      double k = 0.0;
      for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const double r = lam(i) / top;
        wts(i) = std::pow(r, p - 1.0);
        k += std::pow(r, p);
      }
      const Matrix weighted =
          es.eigenvectors() * wts.asDiagonal() * es.eigenvectors().adjoint();
      raw = std::pow(k, (1.0 - p) / p) * (phi.apply_adjoint(weighted) * psi);
    }
    grad = raw - (psi.adjoint() * raw).value().real() * psi;
    return f;
  }
};

Candidate ascend_pure(const PureObjective& obj, Vector psi, const OptimizerConfig& cfg, Rng rng) {
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  Vector grad;
  double f = obj.value(psi, es);
  double step = 0.5;
  int stalls = 0;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const double fg = obj.value_and_grad(psi, grad, es);
    f = fg;
    const double gnorm = grad.norm();
    if (gnorm <= cfg.step_tol * std::max(1.0, f)) break;
    bool accepted = false;
    double trial = std::min(step * 2.0, kStepMax);
    while (trial >= kStepMin) {
      Vector cand = psi + trial * grad;
      cand /= cand.norm();
      const double fc = obj.value(cand, es);
      if (fc >= f + kArmijo * trial * gnorm * gnorm) {
        psi = std::move(cand);
        stalls = (fc - f <= cfg.value_tol * std::max(1.0, fc)) ? stalls + 1 : 0;
        f = fc;
        step = trial;
        accepted = true;
        break;
      }
      trial *= 0.5;
    }
    if (!accepted) {
      // Finite-difference fallback for stagnation at nonsmooth points
      // (degenerate output spectra).
      bool moved = false;
      for (int probe = 0; probe < 6 && !moved; ++probe) {
        Vector dir(psi.size());
        for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = rng.complex_normal();
        dir -= (psi.adjoint() * dir).value() * psi;
        const double dn = dir.norm();
        if (dn <= 0.0) continue;
        dir /= dn;
        for (double h : {1e-4, 1e-6, 1e-8}) {
          Vector cand = psi + h * dir;
          cand /= cand.norm();
          const double fc = obj.value(cand, es);
          if (fc > f) {
            psi = std::move(cand);
            f = fc;
            moved = true;
            break;
          }
        }
      }
      if (!moved) break;
    }
    if (stalls >= kStallLimit) break;
  }
  Candidate out;
  out.value = obj.value(psi, es);
  out.state = std::move(psi);
  out.valid = true;
  return out;
}

NormResult aggregate(std::vector<Candidate> results) {
  NormResult res;
  int best = -1;
  for (int i = 0; i < static_cast<int>(results.size()); ++i) {
    if (!results[i].valid) continue;
    if (best < 0 || results[i].value > results[best].value) best = i;
  }
  if (best < 0) throw std::runtime_error("optimizer produced no candidates");
  res.value = results[best].value;
  res.argmax_state = results[best].state;
  res.argmax_matrix = results[best].matrix;
  for (const Candidate& c : results)
    if (c.valid && c.value >= res.value - 1e-8) ++res.restarts_agreeing;
  res.converged = res.restarts_agreeing >= 2;
  return res;
}

NormResult nu_p_impl(const Channel& phi, double p, const OptimizerConfig& cfg,
                     const std::vector<Vector>& extra_starts) {
  if (!(p >= 1.0)) throw std::invalid_argument("nu_p: p must be >= 1");
  if (p == 1.0) {
    // ||Phi(psi psi^dag)||_1 = Tr Phi(psi psi^dag) = <psi, Phi^adj(I) psi>:
    // exactly the top eigenvalue of Phi^adj(I).
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        phi.apply_adjoint(Matrix::Identity(phi.dim_out(), phi.dim_out())));
    NormResult res;
    res.value = es.eigenvalues().maxCoeff();
    res.argmax_state = es.eigenvectors().col(es.eigenvalues().size() - 1);
    res.restarts_agreeing = std::max(cfg.restarts, 1);
    res.converged = true;
    return res;
  }
  const PureObjective obj{phi, p};
  // Flatter landscapes for small p: double the restart budget.
  const int haar = (p < 2.0) ? cfg.restarts * 2 : cfg.restarts;
  const int total = haar + static_cast<int>(extra_starts.size());
  std::vector<Candidate> results(total);
  parallel_for(total, resolve_threads(cfg, total), [&](int r) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(r));
    Vector start = (r < haar) ? random_state(rng, phi.dim_in())
                              : Vector(extra_starts[r - haar] / extra_starts[r - haar].norm());
    results[r] = ascend_pure(obj, std::move(start), cfg, std::move(rng));
  });
  return aggregate(std::move(results));
}

// ---------------------------------------------------------------------------
// q->p ratio ascent over matrices

struct RatioObjective {
  const Channel& phi;
  double q, p;
  Domain domain;
  // Huber smoothing width for the input norm: |x| -> sqrt(x^2 + mu^2).
  // The trace norm has a kink wherever an eigenvalue crosses zero, and
  // for q = 1 the maximizer sits exactly on one; annealing mu -> 0
  // lets plain ascent walk onto it.
  double mu = 0.0;

  static double smoothed_vector_norm(const RealVector& vals, double q, double mu) {
    RealVector h(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) h(i) = std::hypot(vals(i), mu);
    return pnorm_nonneg(h, q);
  }

  double input_norm(const Matrix& a) const {
    if (mu == 0.0) return schatten_norm(a, q);
    if (domain == Domain::self_adjoint) return smoothed_vector_norm(hermitian_eigenvalues(a), q, mu);
    return smoothed_vector_norm(singular_values(a), q, mu);
  }

  double value(const Matrix& a) const {
    const double nq = input_norm(a);
    if (nq <= 0.0) return 0.0;
    return schatten_norm(phi.apply(a), p) / nq;
  }

  double true_value(const Matrix& a) const {
    const double nq = schatten_norm(a, q);
    if (nq <= 0.0) return 0.0;
    return schatten_norm(phi.apply(a), p) / nq;
  }

  // Gradient of the (smoothed) Schatten norm, stable for large
  // exponents. Hermitian inputs use their eigendecomposition so
  // negative eigenvalues keep their sign.
  static Matrix norm_gradient(const Matrix& b, double p, bool hermitian, double mu) {
    const auto weights = [&](const RealVector& vals, RealVector& wts) {
      RealVector h(vals.size());
      for (Eigen::Index i = 0; i < vals.size(); ++i) h(i) = std::hypot(vals(i), mu);
      const double top = h.maxCoeff();
      if (top <= 0.0) {
        wts.setZero(vals.size());
        return;
      }
      wts.resize(vals.size());
      double k = 0.0;
      if (std::isinf(p)) {
        for (Eigen::Index i = 0; i < vals.size(); ++i)
          wts(i) = (h(i) > 0.0 && h(i) >= top * (1.0 - 1e-12)) ? vals(i) / h(i) : 0.0;
      } else {
        for (Eigen::Index i = 0; i < vals.size(); ++i) {
          if (h(i) <= 0.0) {  // exact zero: the subgradient choice is 0
            wts(i) = 0.0;
            continue;
          }
          const double r = h(i) / top;
          wts(i) = (vals(i) / h(i)) * std::pow(r, p - 1.0);
          k += std::pow(r, p);
        }
        const double scale = std::pow(k, (1.0 - p) / p);
        wts *= scale;
      }
    };
    RealVector wts;
    if (hermitian) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(b);
      weights(es.eigenvalues(), wts);
      return es.eigenvectors() * wts.asDiagonal() * es.eigenvectors().adjoint();
    }
    Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    weights(svd.singularValues(), wts);
    return svd.matrixU() * wts.asDiagonal() * svd.matrixV().adjoint();
  }

  double value_and_grad(const Matrix& a, Matrix& grad) const {
    const bool herm = domain == Domain::self_adjoint;
    const double nq = input_norm(a);
    const Matrix b = phi.apply(a);
    const double np = schatten_norm(b, p);
    const double ratio = np / nq;
    const Matrix gp = phi.apply_adjoint(norm_gradient(b, p, herm, 0.0));
    const Matrix gq = norm_gradient(a, q, herm, mu);
    grad = (gp - ratio * gq) / nq;
    if (herm) grad = hermitian_part(grad);
    return ratio;
  }
};

// Spectral truncations of a: the q < 2 ridge maximizers are
// rank-deficient, so snapping near-zero spectrum away jumps straight
// onto the ridge.
std::vector<Matrix> truncation_moves(const RatioObjective& obj, const Matrix& a) {
  std::vector<Matrix> out;
  if (obj.domain == Domain::self_adjoint) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    const RealVector lam = es.eigenvalues();
    std::vector<Eigen::Index> order(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index x, Eigen::Index y) { return std::abs(lam(x)) > std::abs(lam(y)); });
    Matrix acc = Matrix::Zero(a.rows(), a.cols());
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const Eigen::Index i = order[k];
      acc += lam(i) * (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
      out.push_back(acc);
    }
  } else {
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector sv = svd.singularValues();
    Matrix acc = Matrix::Zero(a.rows(), a.cols());
    for (Eigen::Index k = 0; k + 1 < sv.size(); ++k) {
      acc += sv(k) * (svd.matrixU().col(k) * svd.matrixV().col(k).adjoint());
      out.push_back(acc);
    }
  }
  return out;
}

// Deterministic pattern search along a fixed operator basis; refines
// kink-ridge maximizers (q < 2) that plain gradient steps zigzag on.
void pattern_polish(const RatioObjective& obj, Matrix& a, double& f) {
  const Eigen::Index d = a.rows();
  std::vector<Matrix> dirs;
  const double r2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) {
      if (obj.domain == Domain::self_adjoint) {
        if (j == k) {
          dirs.push_back(matrix_unit(j, j, d));
        } else if (j < k) {
          dirs.push_back(r2 * (matrix_unit(j, k, d) + matrix_unit(k, j, d)));
          dirs.push_back(Complex(0, r2) * (matrix_unit(j, k, d) - matrix_unit(k, j, d)));
        }
      } else {
        dirs.push_back(matrix_unit(j, k, d));
        dirs.push_back(Complex(0, 1) * matrix_unit(j, k, d));
      }
    }
  const auto try_candidate = [&](Matrix cand) {
    const double nq = obj.input_norm(cand);
    if (nq <= 0.0) return false;
    cand /= nq;
    const double fc = obj.value(cand);
    if (fc > f) {
      a = std::move(cand);
      f = fc;
      return true;
    }
    return false;
  };
  const auto try_truncations = [&] {
    for (const Matrix& cand : truncation_moves(obj, a)) try_candidate(cand);
  };
  // Moves along the rank-1 stratum: the ridge is sharp transverse to
  // it, so full-space steps stall while the maximizer still drifts
  // within it.
  const auto try_vector_moves = [&](double h) {
    bool any = false;
    if (obj.domain == Domain::self_adjoint) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(a);
      Eigen::Index top;
      es.eigenvalues().cwiseAbs().maxCoeff(&top);
      const double sign = es.eigenvalues()(top) >= 0 ? 1.0 : -1.0;
      const Vector psi = es.eigenvectors().col(top);
      for (Eigen::Index i = 0; i < d; ++i)
        for (const Complex delta : {Complex(h, 0), Complex(-h, 0), Complex(0, h), Complex(0, -h)}) {
          Vector cand_v = psi;
          cand_v(i) += delta;
          any |= try_candidate(sign * (cand_v * cand_v.adjoint()));
        }
    } else {
      Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const Vector u = svd.matrixU().col(0), v = svd.matrixV().col(0);
      for (Eigen::Index i = 0; i < d; ++i)
        for (const Complex delta : {Complex(h, 0), Complex(-h, 0), Complex(0, h), Complex(0, -h)}) {
          Vector up = u, vp = v;
          up(i) += delta;
          vp(i) += delta;
          any |= try_candidate(up * v.adjoint());
          any |= try_candidate(u * vp.adjoint());
        }
    }
    return any;
  };
  try_truncations();
  double h = 1e-2;
  int rounds = 0;
  while (h >= 1e-10 && rounds < 400) {
    ++rounds;
    bool improved = false;
    for (const Matrix& dir : dirs)
      for (double s : {1.0, -1.0}) {
        Matrix cand = a + (s * h) * dir;
        cand /= obj.input_norm(cand);
        const double fc = obj.value(cand);
        if (fc > f) {
          a = std::move(cand);
          f = fc;
          improved = true;
        }
      }
    improved |= try_vector_moves(h);
    if (!improved) {
      try_truncations();
      h *= 0.25;
    }
  }
}

Candidate ascend_ratio(RatioObjective obj, Matrix a, const OptimizerConfig& cfg, Rng rng) {
  // Anneal the input-norm smoothing for exponents with kinks; smooth
  // exponents run a single exact phase.
  std::vector<double> schedule = {0.0};
  if (obj.q < 2.0) schedule = {1e-2, 1e-4, 1e-6, 0.0};
  const int iters_per_phase = std::max(cfg.max_iters / static_cast<int>(schedule.size()), 1);

  for (double mu : schedule) {
    obj.mu = mu;
    a /= obj.input_norm(a);
    Matrix grad;
    double f = obj.value(a);
    double step = 0.5;
    int stalls = 0;
    for (int iter = 0; iter < iters_per_phase; ++iter) {
      f = obj.value_and_grad(a, grad);
      const double gnorm = grad.norm();
      if (gnorm <= cfg.step_tol * std::max(1.0, f)) break;
      bool accepted = false;
      double trial = std::min(step * 2.0, kStepMax);
      double best_greedy = f;
      Matrix best_greedy_a;
      while (trial >= kStepMin) {
        Matrix cand = a + trial * grad;
        cand /= obj.input_norm(cand);
        const double fc = obj.value(cand);
        if (fc >= f + kArmijo * trial * gnorm * gnorm) {
          a = std::move(cand);
          stalls = (fc - f <= cfg.value_tol * std::max(1.0, fc)) ? stalls + 1 : 0;
          f = fc;
          step = trial;
          accepted = true;
          break;
        }
        if (fc > best_greedy) {
          best_greedy = fc;
          best_greedy_a = std::move(cand);
        }
        trial *= 0.5;
      }
      if (!accepted && best_greedy > f) {
        // Armijo failed but plain improvement exists (kink crawling).
        a = std::move(best_greedy_a);
        stalls = (best_greedy - f <= cfg.value_tol * std::max(1.0, best_greedy)) ? stalls + 1 : 0;
        f = best_greedy;
        accepted = true;
      }
      if (!accepted) {
        bool moved = false;
        for (int probe = 0; probe < 8 && !moved; ++probe) {
          Matrix dir = (obj.domain == Domain::self_adjoint)
                           ? random_hermitian(rng, a.rows())
                           : ginibre(rng, a.rows(), a.cols());
          const double dn = dir.norm();
          if (dn <= 0.0) continue;
          dir /= dn;
          for (double h : {1e-3, 1e-4, 1e-5, 1e-6, 1e-8}) {
            Matrix cand = a + h * dir;
            cand /= obj.input_norm(cand);
            const double fc = obj.value(cand);
            if (fc > f) {
              a = std::move(cand);
              f = fc;
              moved = true;
              break;
            }
          }
        }
        if (!moved) break;
      }
      if (stalls >= kStallLimit) break;
    }
  }
  if (obj.q < 2.0) {
    obj.mu = 0.0;
    a /= obj.input_norm(a);
    double f = obj.value(a);
    pattern_polish(obj, a, f);
  }
  Candidate out;
  out.value = obj.true_value(a);
  out.matrix = std::move(a);
  out.valid = true;
  return out;
}

}  // namespace

NormResult nu_p(const Channel& phi, double p, const OptimizerConfig& cfg) {
  return nu_p_impl(phi, p, cfg, {});
}

NormResult norm_q_to_p(const Channel& phi, double q, double p, Domain domain,
                       const OptimizerConfig& cfg) {
  if (!(p >= 1.0) || !(q >= 1.0))
    throw std::invalid_argument("norm_q_to_p: p and q must be >= 1");
  const RatioObjective obj{phi, q, p, domain};
  const int total = (p < 2.0 || q < 2.0) ? cfg.restarts * 2 : cfg.restarts;
  std::vector<Candidate> results(total);
  parallel_for(total, resolve_threads(cfg, total), [&](int r) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(r) + 0x71c3);
    // Every fourth unrestricted start is Hermitian: the self-adjoint
    // sup is a lower bound, so those basins are always worth visiting.
    const bool herm_start = domain == Domain::self_adjoint || r % 4 == 3;
    Matrix start = herm_start ? random_hermitian(rng, phi.dim_in())
                              : ginibre(rng, phi.dim_in(), phi.dim_in());
    results[r] = ascend_ratio(obj, std::move(start), cfg, std::move(rng));
  });
  return aggregate(std::move(results));
}

double norm_2_to_2_exact(const Channel& phi) {
  return singular_values(superop_matrix(phi).entries)(0);
}

MultRatioResult mult_ratio(const Channel& phi, const Channel& omega, double p,
                           const OptimizerConfig& cfg) {
  OptimizerConfig ca = cfg, cb = cfg, cab = cfg;
  ca.seed = cfg.seed * 3 + 1;
  cb.seed = cfg.seed * 3 + 2;
  cab.seed = cfg.seed * 3 + 3;
  const NormResult na = nu_p(phi, p, ca);
  const NormResult nb = nu_p(omega, p, cb);
  const Channel tensor = tensor_channel(phi, omega);
  std::vector<Vector> extra;
  if (na.argmax_state.size() > 0 && nb.argmax_state.size() > 0) {
    Vector witness(phi.dim_in() * omega.dim_in());
    for (Eigen::Index i = 0; i < phi.dim_in(); ++i)
      witness.segment(i * omega.dim_in(), omega.dim_in()) = na.argmax_state(i) * nb.argmax_state;
    extra.push_back(std::move(witness));
  }
  const NormResult nab = nu_p_impl(tensor, p, cab, extra);
  MultRatioResult res;
  res.nu_a = na.value;
  res.nu_b = nb.value;
  res.nu_ab = nab.value;
  res.ratio = nab.value / (na.value * nb.value);
  res.witness = nab.argmax_state;
  res.converged = na.converged && nb.converged && nab.converged;
  return res;
}

SingularBasis singular_basis(const Channel& phi) {
  const Eigen::Index d = phi.dim_in();
  const Matrix s = superop_matrix(phi).entries;
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(s.adjoint() * s));
  const RealVector lam = es.eigenvalues();  // ascending
  const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());

  SingularBasis out;
  out.singular_values.resize(lam.size());
  out.basis.reserve(lam.size());
  // Descending order; regroup degenerate eigenvalues and re-symmetrize
  // each group (the eigenspaces of Phi^adj o Phi are closed under the
  // dagger because Phi(B^dagger) = Phi(B)^dagger).
  std::vector<Matrix> raw;
  for (Eigen::Index m = lam.size() - 1; m >= 0; --m) {
    out.singular_values(lam.size() - 1 - m) = std::sqrt(std::max(lam(m), 0.0));
    raw.push_back(unvec_rm(es.eigenvectors().col(m), d, d));
  }
  std::size_t g0 = 0;
  while (g0 < raw.size()) {
    std::size_t g1 = g0 + 1;
    const double mu2 = lam(lam.size() - 1 - static_cast<Eigen::Index>(g0));
    while (g1 < raw.size() &&
           std::abs(lam(lam.size() - 1 - static_cast<Eigen::Index>(g1)) - mu2) <= 1e-8 * scale)
      ++g1;
    const std::size_t size = g1 - g0;
    // Gram-Schmidt over real coefficients on the Hermitian candidates.
    std::vector<Matrix> picked;
    for (std::size_t i = g0; i < g1 && picked.size() < size; ++i) {
      const Matrix cands[2] = {hermitian_part(raw[i]),
                               Matrix(Complex(0, 0.5) * (raw[i] - raw[i].adjoint()))};
      for (const Matrix& c0 : cands) {
        if (picked.size() >= size) break;
        Matrix c = c0;
        for (const Matrix& u : picked) c -= hs_inner(u, c).real() * u;
        const double n = c.norm();
        if (n > 1e-6) picked.push_back(c / n);
      }
    }
    if (picked.size() == size) {
      for (auto& g : picked) out.basis.push_back(std::move(g));
    } else {
      for (std::size_t i = g0; i < g1; ++i) out.basis.push_back(raw[i]);
    }
    g0 = g1;
  }
  out.self_adjoint = true;
  for (const Matrix& g : out.basis)
    if ((g - g.adjoint()).cwiseAbs().maxCoeff() > 1e-10) out.self_adjoint = false;
  return out;
}

BellObstruction bell_obstruction() {
  Matrix n(2, 2);
  n << 2.0, Complex(2.0, 1.0), Complex(2.0, -1.0), 0.0;
  n /= std::sqrt(2.0);
  const PsdVerdict verdict = psd_check(n, tol::psd);
  return {n, verdict.is_psd, schatten_norm(n, 1.0)};
}

}  // namespace qpnorm
