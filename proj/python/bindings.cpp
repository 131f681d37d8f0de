#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpnorm/conditions.hpp"
#include "qpnorm/experiments.hpp"
#include "qpnorm/norms.hpp"
#include "qpnorm/qubit.hpp"
#include "qpnorm/serialization.hpp"
#include "qpnorm/version.hpp"
#include "qpnorm/zoo.hpp"

namespace py = pybind11;
using namespace qpnorm;

namespace {

OptimizerConfig make_config(int restarts, int max_iters, double step_tol, double value_tol,
                            std::uint64_t seed, int threads) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iters = max_iters;
  cfg.step_tol = step_tol;
  cfg.value_tol = value_tol;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximal p-norms of completely positive maps";
  m.attr("__version__") = version;

  py::register_exception<InvalidChannelError>(m, "InvalidChannelError", PyExc_ValueError);
  py::register_exception<DimensionCapError>(m, "DimensionCapError", PyExc_ValueError);

  // --- matrix operations -------------------------------------------------
  m.def("matrix_unit", &matrix_unit, py::arg("j"), py::arg("k"), py::arg("d"));
  m.def("schatten_norm", &schatten_norm, py::arg("a"), py::arg("p"));
  m.def("abs_matrix", &abs_matrix, py::arg("a"));
  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("block_decompose", &block_decompose, py::arg("gamma"), py::arg("d"));
  m.def("basis_decompose", &basis_decompose, py::arg("gamma"), py::arg("basis"));
  m.def("partial_trace", &partial_trace, py::arg("gamma"), py::arg("which_factor"),
        py::arg("d1"), py::arg("d2"));
  m.def(
      "is_psd",
      [](const Matrix& a, double tol) {
        const PsdVerdict v = psd_check(a, tol);
        return py::make_tuple(v.is_psd, v.min_eigenvalue);
      },
      py::arg("a"), py::arg("tol") = tol::psd);
  m.def("pauli", &pauli, py::arg("k"));

  // --- channels ----------------------------------------------------------
  py::class_<Channel>(m, "Channel")
      .def(py::init<std::vector<Matrix>, bool>(), py::arg("kraus"),
           py::arg("trace_preserving") = false)
      .def_property_readonly("dim_in", &Channel::dim_in)
      .def_property_readonly("dim_out", &Channel::dim_out)
      .def_property_readonly("kraus", &Channel::kraus)
      .def_property_readonly("trace_preserving", &Channel::trace_preserving)
      .def("apply", &Channel::apply, py::arg("a"))
      .def("apply_adjoint", &Channel::apply_adjoint, py::arg("b"))
      .def("adjoint", &Channel::adjoint)
      .def("__repr__", [](const Channel& c) {
        return "<qpnorm.Channel " + std::to_string(c.dim_in()) + "->" +
               std::to_string(c.dim_out()) + ", " + std::to_string(c.kraus().size()) +
               " Kraus>";
      });

  m.def("choi_of", [](const Channel& c) { return choi_of(c).entries; }, py::arg("phi"));
  m.def(
      "kraus_from_choi",
      [](const Matrix& choi, Eigen::Index dim_in, Eigen::Index dim_out, double rank_tol,
         bool tp) { return kraus_from_choi({dim_in, dim_out, choi}, rank_tol, tp); },
      py::arg("choi"), py::arg("dim_in"), py::arg("dim_out"),
      py::arg("rank_tol") = tol::kraus_rank_cut, py::arg("trace_preserving") = false);
  m.def("superop_matrix", [](const Channel& c) { return superop_matrix(c).entries; },
        py::arg("phi"));
  m.def("tensor_channel", &tensor_channel, py::arg("phi"), py::arg("omega"));
  m.def("is_cp", &is_cp, py::arg("phi"), py::arg("tol") = tol::psd);
  m.def("is_tp", &is_tp, py::arg("phi"), py::arg("tol") = tol::tp_check);
  m.def("is_unital", &is_unital, py::arg("phi"), py::arg("tol") = tol::tp_check);

  // --- map zoo -----------------------------------------------------------
  m.def("identity_channel", &identity_channel, py::arg("d"));
  m.def("diagonal_map", &diagonal_map, py::arg("a"));
  m.def("qc_map", &qc_map, py::arg("d_stochastic"));
  m.def("werner_holevo", &werner_holevo, py::arg("d"));
  m.def("depolarizing", &depolarizing, py::arg("d"), py::arg("lam"));
  m.def("extreme_cp", &extreme_cp, py::arg("a"));
  m.def("random_channel", &random_channel, py::arg("d_in"), py::arg("d_out"),
        py::arg("kraus_count"), py::arg("seed"));
  m.def("qubit_canonical", &qubit_canonical, py::arg("t"), py::arg("lam"));

  py::class_<FormParams>(m, "FormParams")
      .def(py::init([](const RealMatrix& d, const Matrix& a, const RealMatrix& eps) {
             return FormParams{d, a, eps};
           }),
           py::arg("d_matrix"), py::arg("a_offdiag"), py::arg("epsilon"))
      .def_readwrite("d_matrix", &FormParams::d_matrix)
      .def_readwrite("a_offdiag", &FormParams::a_offdiag)
      .def_readwrite("epsilon", &FormParams::epsilon);
  m.def(
      "form_map",
      [](const FormParams& p) {
        const FormMapResult r = form_map(p);
        return py::make_tuple(r.channel ? py::cast(*r.channel) : py::none(),
                              r.choi_min_eigenvalue);
      },
      py::arg("params"), "Returns (channel or None, choi_min_eigenvalue).");

  // --- norms -------------------------------------------------------------
  py::class_<NormResult>(m, "NormResult")
      .def_readonly("value", &NormResult::value)
      .def_readonly("argmax_state", &NormResult::argmax_state)
      .def_readonly("argmax_matrix", &NormResult::argmax_matrix)
      .def_readonly("restarts_agreeing", &NormResult::restarts_agreeing)
      .def_readonly("converged", &NormResult::converged)
      .def("__repr__", [](const NormResult& r) {
        return "<qpnorm.NormResult value=" + std::to_string(r.value) + ">";
      });

  m.def(
      "nu_p",
      [](const Channel& phi, double p, int restarts, int max_iters, double step_tol,
         double value_tol, std::uint64_t seed, int threads) {
        return nu_p(phi, p,
                    make_config(restarts, max_iters, step_tol, value_tol, seed, threads));
      },
      py::arg("phi"), py::arg("p"), py::arg("restarts") = 64, py::arg("max_iters") = 2000,
      py::arg("step_tol") = 1e-12, py::arg("value_tol") = 1e-10, py::arg("seed") = 0,
      py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def(
      "norm_q_to_p",
      [](const Channel& phi, double q, double p, const std::string& restrict_domain,
         int restarts, int max_iters, double step_tol, double value_tol, std::uint64_t seed,
         int threads) {
        Domain dom;
        if (restrict_domain == "self-adjoint")
          dom = Domain::self_adjoint;
        else if (restrict_domain == "none")
          dom = Domain::unrestricted;
        else
          throw std::invalid_argument("restrict must be 'none' or 'self-adjoint'");
        return norm_q_to_p(phi, q, p, dom,
                           make_config(restarts, max_iters, step_tol, value_tol, seed, threads));
      },
      py::arg("phi"), py::arg("q"), py::arg("p"), py::arg("restrict") = "none",
      py::arg("restarts") = 64, py::arg("max_iters") = 2000, py::arg("step_tol") = 1e-12,
      py::arg("value_tol") = 1e-10, py::arg("seed") = 0, py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def("norm_2_to_2_exact", &norm_2_to_2_exact, py::arg("phi"));

  py::class_<MultRatioResult>(m, "MultRatioResult")
      .def_readonly("ratio", &MultRatioResult::ratio)
      .def_readonly("nu_a", &MultRatioResult::nu_a)
      .def_readonly("nu_b", &MultRatioResult::nu_b)
      .def_readonly("nu_ab", &MultRatioResult::nu_ab)
      .def_readonly("witness", &MultRatioResult::witness)
      .def_readonly("converged", &MultRatioResult::converged);
  m.def(
      "mult_ratio",
      [](const Channel& a, const Channel& b, double p, int restarts, int max_iters,
         double step_tol, double value_tol, std::uint64_t seed, int threads) {
        return mult_ratio(a, b, p,
                          make_config(restarts, max_iters, step_tol, value_tol, seed, threads));
      },
      py::arg("phi"), py::arg("omega"), py::arg("p"), py::arg("restarts") = 64,
      py::arg("max_iters") = 2000, py::arg("step_tol") = 1e-12, py::arg("value_tol") = 1e-10,
      py::arg("seed") = 0, py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

  py::class_<SingularBasis>(m, "SingularBasis")
      .def_readonly("basis", &SingularBasis::basis)
      .def_readonly("singular_values", &SingularBasis::singular_values)
      .def_readonly("self_adjoint", &SingularBasis::self_adjoint);
  m.def("singular_basis", &singular_basis, py::arg("phi"));

  m.def("bell_obstruction", [] {
    const BellObstruction b = bell_obstruction();
    return py::make_tuple(b.n, b.is_psd, b.trace_norm);
  });

  // --- conditions ----------------------------------------------------------
  m.def(
      "condition_matrix",
      [](const Channel& phi, const Matrix& u) { return condition_matrix(phi, u).entries; },
      py::arg("phi"), py::arg("u"));
  m.def(
      "check_postr",
      [](const Channel& phi, const Matrix& u, double tol) {
        const ConditionCheck c = check_postr(phi, u, tol);
        return py::make_tuple(c.holds, c.min_entry, c.max_imag);
      },
      py::arg("phi"), py::arg("u"), py::arg("tol") = 1e-9);
  m.def("choi_entrywise_nonneg", &choi_entrywise_nonneg, py::arg("phi"),
        py::arg("tol") = 1e-10);
  m.def(
      "search_basis",
      [](const Channel& phi, int restarts, int max_iters, std::uint64_t seed, double tol) {
        OptimizerConfig cfg = basis_search_defaults();
        cfg.restarts = restarts;
        cfg.max_iters = max_iters;
        cfg.seed = seed;
        const BasisSearchResult r = search_basis(phi, cfg, tol);
        return py::make_tuple(r.best_unitary, r.min_entry, r.holds);
      },
      py::arg("phi"), py::arg("restarts") = 8, py::arg("max_iters") = 500, py::arg("seed") = 0,
      py::arg("tol") = 1e-9, py::call_guard<py::gil_scoped_release>());
  m.def(
      "recognize_form",
      [](const Channel& phi, double tol) -> py::object {
        const auto p = recognize_form(phi, tol);
        return p ? py::cast(*p) : py::none();
      },
      py::arg("phi"), py::arg("tol") = 1e-9);

  // --- qubit analysis ------------------------------------------------------
  py::class_<QubitMapParams>(m, "QubitMapParams")
      .def(py::init([](const Vector3& s, const Vector3& t, const Matrix3& tmat, double scale) {
             return QubitMapParams{s, t, tmat, scale};
           }),
           py::arg("s"), py::arg("t"), py::arg("tmat"), py::arg("scale") = 1.0)
      .def_readwrite("s", &QubitMapParams::s)
      .def_readwrite("t", &QubitMapParams::t)
      .def_readwrite("tmat", &QubitMapParams::tmat)
      .def_readwrite("scale", &QubitMapParams::scale);
  m.def(
      "bloch_decompose",
      [](const Matrix& a) {
        const BlochDecomposition b = bloch_decompose(a);
        return py::make_tuple(b.z0, b.w, b.u);
      },
      py::arg("a"));
  m.def(
      "bloch_compose",
      [](Complex z0, const Vector3& w, const Vector3& u) {
        return bloch_compose({z0, w, u});
      },
      py::arg("z0"), py::arg("w"), py::arg("u"));
  m.def("qubit_map_params", &qubit_map_params, py::arg("phi"));
  m.def("channel_from_qubit_params", &channel_from_qubit_params, py::arg("params"));
  m.def(
      "canonicalize",
      [](const QubitMapParams& p) {
        const CanonicalForm c = canonicalize(p);
        return py::make_tuple(c.params, c.rot_out, c.rot_in);
      },
      py::arg("params"));
  m.def("gram_eigenvalues_closed", &gram_eigenvalues_closed, py::arg("w"), py::arg("u"));
  m.def("output_gram_eigenvalues_tp", &output_gram_eigenvalues_tp, py::arg("params"),
        py::arg("w"), py::arg("u"));
  m.def("output_gram_eigenvalues", &output_gram_eigenvalues, py::arg("params"), py::arg("w"),
        py::arg("u"));
  m.def("trace_norm_squared_closed", &trace_norm_squared_closed, py::arg("w"), py::arg("u"));
  m.def("f_mono", &f_mono, py::arg("x"), py::arg("a"), py::arg("m"));
  m.def("g_mono", &g_mono, py::arg("x"), py::arg("a"), py::arg("m"));
  m.def(
      "verify_strong_inequality",
      [](const Channel& phi, const Matrix& a, double p, bool exploratory) {
        const StrongIneqResult r = verify_strong_inequality(phi, a, p, exploratory);
        return py::make_tuple(r.lhs, r.rhs, r.holds);
      },
      py::arg("phi"), py::arg("a"), py::arg("p"), py::arg("exploratory") = false);

  // --- experiments and serialization ---------------------------------------
  m.def(
      "bell_witness_ratio",
      [](const Channel& a, const Channel& b, double p, double nu_a, double nu_b) {
        return bell_witness_ratio(a, b, p, nu_a, nu_b);
      },
      py::arg("phi"), py::arg("omega"), py::arg("p"), py::arg("nu_a"), py::arg("nu_b"));
  m.def("channel_to_json", [](const Channel& c) { return channel_to_json(c).dump(); },
        py::arg("phi"));
  m.def("channel_from_json",
        [](const std::string& text) { return channel_from_json(nlohmann::json::parse(text)); },
        py::arg("text"));
  m.def("load_channel_file", &load_channel_file, py::arg("path"));
  m.def("save_channel_file", &save_channel_file, py::arg("phi"), py::arg("path"));
  m.def("channel_from_zoo_string", &channel_from_zoo_string, py::arg("spec"));
}
