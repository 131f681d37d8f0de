#include "qpnorm/experiments.hpp"

#include <cstdio>

namespace qpnorm {

double bell_witness_ratio(const Channel& phi, const Channel& omega, double p, double nu_a,
                          double nu_b) {
  const Eigen::Index da = phi.dim_in(), db = omega.dim_in();
  const Eigen::Index m = std::min(da, db);
  Vector beta = Vector::Zero(da * db);
  for (Eigen::Index j = 0; j < m; ++j) beta(j * db + j) = 1.0 / std::sqrt(static_cast<double>(m));
  const Channel tensor = tensor_channel(phi, omega);
  return schatten_norm(tensor.apply(beta * beta.adjoint()), p) / (nu_a * nu_b);
}

SweepRow mult_experiment(const Channel& phi, const Channel& omega, double p,
                         const OptimizerConfig& cfg) {
  const MultRatioResult mr = mult_ratio(phi, omega, p, cfg);
  SweepRow row;
  row.p = p;
  row.nu_a = mr.nu_a;
  row.nu_b = mr.nu_b;
  row.nu_ab = mr.nu_ab;
  row.ratio = mr.ratio;
  row.bell_ratio = bell_witness_ratio(phi, omega, p, mr.nu_a, mr.nu_b);
  row.converged = mr.converged;
  return row;
}

std::vector<SweepRow> sweep_experiment(const Channel& phi, const Channel& omega,
                                       const std::vector<double>& p_grid,
                                       const OptimizerConfig& cfg) {
  std::vector<SweepRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) rows.push_back(mult_experiment(phi, omega, p, cfg));
  return rows;
}

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "p,nu_A,nu_B,nu_AB,ratio,bell_ratio,converged\n";
  for (const SweepRow& r : rows) {
    out += csv_number(r.p) + "," + csv_number(r.nu_a) + "," + csv_number(r.nu_b) + "," +
           csv_number(r.nu_ab) + "," + csv_number(r.ratio) + "," + csv_number(r.bell_ratio) +
           "," + (r.converged ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace qpnorm
