// Command-line front end: loads channels from JSON files or the map
// zoo, runs norm and condition computations, and emits JSON or CSV
// reports. All numbers come from library calls; the CLI only formats.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qpnorm/conditions.hpp"
#include "qpnorm/experiments.hpp"
#include "qpnorm/norms.hpp"
#include "qpnorm/qubit.hpp"
#include "qpnorm/serialization.hpp"
#include "qpnorm/version.hpp"
#include "qpnorm/zoo.hpp"

namespace {

using nlohmann::json;
using namespace qpnorm;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvalidChannel = 3;
constexpr int kExitResourceCap = 4;

// The tensor superoperator is capped at 81x81 so every command stays
// at desk scale.
constexpr Eigen::Index kMaxTensorDim = 9;

struct ChannelSource {
  std::string zoo;
  std::string file;

  Channel load(const std::string& what) const {
    if (!zoo.empty() && !file.empty())
      throw std::invalid_argument("give either --zoo" + what + " or --in" + what + ", not both");
    if (!zoo.empty()) return channel_from_zoo_string(zoo);
    if (!file.empty()) return load_channel_file(file);
    throw std::invalid_argument("missing channel source: --zoo" + what + " or --in" + what);
  }

  json echo() const {
    if (!zoo.empty()) return json{{"zoo", zoo}};
    return json{{"file", file}};
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QPNORM_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("QPNORM_SEED is not an integer");
    }
  }
  return 0;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    out.push_back(std::move(row));
  }
  return out;
}

json result_row(const std::string& name, double value, double tolerance,
                std::optional<bool> converged = std::nullopt) {
  json row{{"name", name}, {"value", value}, {"tolerance", tolerance}};
  if (converged) row["converged"] = *converged;
  return row;
}

json report_skeleton(const std::string& command, const OptimizerConfig& cfg) {
  return json{{"tool", "qpnorm"},
              {"version", version},
              {"command", command},
              {"seed", cfg.seed},
              {"config",
               {{"restarts", cfg.restarts},
                {"max_iters", cfg.max_iters},
                {"step_tol", cfg.step_tol},
                {"value_tol", cfg.value_tol},
                {"threads", cfg.threads}}},
              {"results", json::array()}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write output file: " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

// Optimizer results carry the basin-agreement certificate; exact
// linear-algebra paths carry working precision.
constexpr double kOptimizerTol = 1e-8;
constexpr double kExactTol = 1e-12;

void check_tensor_cap(const Channel& a, const Channel& b) {
  if (a.dim_in() * b.dim_in() > kMaxTensorDim || a.dim_out() * b.dim_out() > kMaxTensorDim)
    throw DimensionCapError("tensor space exceeds the 81x81 superoperator cap");
}

std::vector<double> parse_grid(const std::string& grid, double p_min, double p_max,
                               double p_step) {
  std::vector<double> ps;
  if (!grid.empty()) {
    std::string cur;
    for (char c : grid + ",") {
      if (c == ',') {
        if (!cur.empty()) ps.push_back(std::stod(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
  } else {
    if (p_step <= 0.0) throw std::invalid_argument("--p-step must be positive");
    for (double p = p_min; p <= p_max + 1e-12; p += p_step) ps.push_back(p);
  }
  for (double p : ps)
    if (!(p >= 1.0)) throw std::invalid_argument("every p in the grid must be >= 1");
  if (ps.empty()) throw std::invalid_argument("empty p grid");
  return ps;
}

int run(int argc, char** argv) {
  CLI::App app{"maximal p-norms of completely positive maps"};
  app.require_subcommand(1);

  OptimizerConfig cfg;
  cfg.seed = default_seed();
  std::string out_path;
  app.add_option("--seed", cfg.seed, "RNG seed (default from QPNORM_SEED, else 0)");
  app.add_option("--restarts", cfg.restarts, "optimizer restarts");
  app.add_option("--max-iters", cfg.max_iters, "iteration cap per restart");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  ChannelSource src, src_a, src_b;
  double p = 2.0, q = 2.0;

  CLI::App* nu_cmd = app.add_subcommand("nu", "maximal output p-norm of a channel");
  nu_cmd->add_option("--zoo", src.zoo, "zoo spec, e.g. werner-holevo:3");
  nu_cmd->add_option("--in", src.file, "channel JSON file");
  nu_cmd->add_option("--p", p, "Schatten exponent (>= 1)")->required();

  CLI::App* norm_cmd = app.add_subcommand("norm", "q->p norm of a channel");
  std::string restrict_domain = "none";
  norm_cmd->add_option("--zoo", src.zoo, "zoo spec");
  norm_cmd->add_option("--in", src.file, "channel JSON file");
  norm_cmd->add_option("--q", q, "input exponent")->required();
  norm_cmd->add_option("--p", p, "output exponent")->required();
  norm_cmd->add_option("--restrict", restrict_domain,
                       "optimization domain: none | self-adjoint");

  CLI::App* cond_cmd = app.add_subcommand("check-condition",
                                          "entrywise nonnegativity of the condition matrix");
  bool do_search = false;
  double cond_tol = 1e-9;
  cond_cmd->add_option("--zoo", src.zoo, "zoo spec");
  cond_cmd->add_option("--in", src.file, "channel JSON file");
  cond_cmd->add_flag("--search", do_search, "also search over basis unitaries");
  cond_cmd->add_option("--tol", cond_tol, "entry tolerance");

  CLI::App* mult_cmd = app.add_subcommand("mult", "multiplicativity ratio for a channel pair");
  mult_cmd->add_option("--zoo-a", src_a.zoo, "first channel zoo spec");
  mult_cmd->add_option("--in-a", src_a.file, "first channel JSON file");
  mult_cmd->add_option("--zoo-b", src_b.zoo, "second channel zoo spec");
  mult_cmd->add_option("--in-b", src_b.file, "second channel JSON file");
  mult_cmd->add_option("--p", p, "Schatten exponent")->required();

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "multiplicativity ratios over a p grid");
  double p_min = 1.0, p_max = 5.0, p_step = 0.5;
  std::string grid, sweep_format = "csv";
  sweep_cmd->add_option("--zoo-a", src_a.zoo, "first channel zoo spec");
  sweep_cmd->add_option("--in-a", src_a.file, "first channel JSON file");
  sweep_cmd->add_option("--zoo-b", src_b.zoo, "second channel zoo spec");
  sweep_cmd->add_option("--in-b", src_b.file, "second channel JSON file");
  sweep_cmd->add_option("--p-min", p_min, "grid start");
  sweep_cmd->add_option("--p-max", p_max, "grid end");
  sweep_cmd->add_option("--p-step", p_step, "grid step");
  sweep_cmd->add_option("--grid", grid, "explicit comma-separated p values");
  sweep_cmd->add_option("--format", sweep_format, "csv (default) or json");

  CLI::App* zoo_cmd = app.add_subcommand("zoo", "emit a zoo channel as JSON");
  std::string zoo_spec;
  zoo_cmd->add_option("spec", zoo_spec, "zoo spec string")->required();

  app.parse(argc, argv);

  if (nu_cmd->parsed()) {
    const Channel ch = src.load("");
    const NormResult r = nu_p(ch, p, cfg);
    json rep = report_skeleton("nu", cfg);
    rep["config"]["p"] = p;
    rep["config"]["channel"] = src.echo();
    rep["results"].push_back(result_row("nu_p", r.value, kOptimizerTol, r.converged));
    rep["restarts_agreeing"] = r.restarts_agreeing;
    rep["witness_state"] = vector_json(r.argmax_state);
    emit_json(rep, out_path);
    return kExitOk;
  }

  if (norm_cmd->parsed()) {
    if (restrict_domain != "none" && restrict_domain != "self-adjoint")
      throw std::invalid_argument("--restrict must be none or self-adjoint");
    const Domain domain =
        restrict_domain == "self-adjoint" ? Domain::self_adjoint : Domain::unrestricted;
    const Channel ch = src.load("");
    json rep = report_skeleton("norm", cfg);
    rep["config"]["p"] = p;
    rep["config"]["q"] = q;
    rep["config"]["restrict"] = restrict_domain;
    rep["config"]["channel"] = src.echo();
    const NormResult r = norm_q_to_p(ch, q, p, domain, cfg);
    rep["results"].push_back(result_row("norm_q_to_p", r.value, kOptimizerTol, r.converged));
    if (p == 2.0 && q == 2.0) {
      const double exact = norm_2_to_2_exact(ch);
      rep["results"].push_back(result_row("norm_2_to_2_exact", exact, kExactTol));
      rep["results"].push_back(
          result_row("exact_minus_optimized", exact - r.value, kOptimizerTol));
    }
    rep["witness_matrix"] = matrix_json(r.argmax_matrix);
    emit_json(rep, out_path);
    return kExitOk;
  }

  if (cond_cmd->parsed()) {
    const Channel ch = src.load("");
    const Matrix eye = Matrix::Identity(ch.dim_in(), ch.dim_in());
    const ConditionCheck at_identity = check_postr(ch, eye, cond_tol);
    json rep = report_skeleton("check-condition", cfg);
    rep["config"]["tol"] = cond_tol;
    rep["config"]["channel"] = src.echo();
    rep["holds"] = at_identity.holds;
    rep["results"].push_back(result_row("min_entry", at_identity.min_entry, cond_tol));
    rep["results"].push_back(result_row("max_imag", at_identity.max_imag, cond_tol));
    if (do_search) {
      OptimizerConfig scfg = basis_search_defaults();
      scfg.seed = cfg.seed;
      const BasisSearchResult found = search_basis(ch, scfg, cond_tol);
      rep["search"] = {{"holds", found.holds},
                       {"min_entry", found.min_entry},
                       {"penalty", found.penalty},
                       {"unitary", matrix_json(found.best_unitary)}};
    }
    emit_json(rep, out_path);
    return kExitOk;
  }

  if (mult_cmd->parsed()) {
    const Channel a = src_a.load("-a"), b = src_b.load("-b");
    check_tensor_cap(a, b);
    const SweepRow row = mult_experiment(a, b, p, cfg);
    json rep = report_skeleton("mult", cfg);
    rep["config"]["p"] = p;
    rep["config"]["channel_a"] = src_a.echo();
    rep["config"]["channel_b"] = src_b.echo();
    rep["results"].push_back(result_row("nu_A", row.nu_a, kOptimizerTol));
    rep["results"].push_back(result_row("nu_B", row.nu_b, kOptimizerTol));
    rep["results"].push_back(result_row("nu_AB", row.nu_ab, kOptimizerTol, row.converged));
    rep["results"].push_back(result_row("ratio", row.ratio, kOptimizerTol, row.converged));
    rep["results"].push_back(result_row("bell_ratio", row.bell_ratio, kExactTol));
    emit_json(rep, out_path);
    return kExitOk;
  }

  if (sweep_cmd->parsed()) {
    const Channel a = src_a.load("-a"), b = src_b.load("-b");
    check_tensor_cap(a, b);
    const std::vector<double> ps = parse_grid(grid, p_min, p_max, p_step);
    const std::vector<SweepRow> rows = sweep_experiment(a, b, ps, cfg);
    if (sweep_format == "csv") {
      emit(sweep_csv(rows), out_path);
    } else if (sweep_format == "json") {
      json rep = report_skeleton("sweep", cfg);
      rep["config"]["channel_a"] = src_a.echo();
      rep["config"]["channel_b"] = src_b.echo();
      for (const SweepRow& r : rows) {
        json row{{"p", r.p},          {"nu_A", r.nu_a},
                 {"nu_B", r.nu_b},    {"nu_AB", r.nu_ab},
                 {"ratio", r.ratio},  {"bell_ratio", r.bell_ratio},
                 {"converged", r.converged}, {"tolerance", kOptimizerTol}};
        rep["results"].push_back(std::move(row));
      }
      emit_json(rep, out_path);
    } else {
      throw std::invalid_argument("--format must be csv or json");
    }
    return kExitOk;
  }

  if (zoo_cmd->parsed()) {
    const Channel ch = channel_from_zoo_string(zoo_spec);
    emit_json(channel_to_json(ch), out_path);
    return kExitOk;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const DimensionCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const InvalidChannelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidChannel;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
