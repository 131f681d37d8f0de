#pragma once

#include <string>
#include <vector>

#include "qpnorm/norms.hpp"

namespace qpnorm {

struct SweepRow {
  double p;
  double nu_a;
  double nu_b;
  double nu_ab;
  double ratio;
  double bell_ratio;
  bool converged;
};

/// ||(Phi (x) Omega)(beta)||_p / (nu_a nu_b) with beta the maximally
/// entangled input (truncated to min(d_a, d_b) Schmidt terms when the
/// input dimensions differ). A deterministic lower-bound witness for
/// the multiplicativity ratio.
double bell_witness_ratio(const Channel& phi, const Channel& omega, double p, double nu_a,
                          double nu_b);

/// One multiplicativity measurement: optimizer ratio and the
/// Bell-state witness ratio at a single p.
SweepRow mult_experiment(const Channel& phi, const Channel& omega, double p,
                         const OptimizerConfig& cfg);

std::vector<SweepRow> sweep_experiment(const Channel& phi, const Channel& omega,
                                       const std::vector<double>& p_grid,
                                       const OptimizerConfig& cfg);

/// Lossless float formatting (17 significant digits).
std::string csv_number(double x);

/// CSV with header p,nu_A,nu_B,nu_AB,ratio,bell_ratio,converged.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace qpnorm
