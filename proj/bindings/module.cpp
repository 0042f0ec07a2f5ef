/**
 * @file module.cpp
 * @brief Python bindings for the alignment workbench: bounds, DoF-plane
 *        geometry, constructions and end-to-end simulation.
 */
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsalign/dof_achievable.hpp"
#include "gsalign/dof_bounds.hpp"
#include "gsalign/gsa.hpp"
#include "gsalign/io_json.hpp"
#include "gsalign/relay_bc.hpp"
#include "gsalign/sim.hpp"

namespace py = pybind11;
using namespace gsalign;

namespace {

Pattern to_pattern(const std::string& s) { return pattern_from_string(s); }

DataSwitchMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
  const int K = static_cast<int>(rows.size());
  DataSwitchMatrix D{K, std::vector<int>(static_cast<std::size_t>(K) * K, 0)};
  for (int i = 0; i < K; ++i) {
    if (static_cast<int>(rows[i].size()) != K) {
      throw std::invalid_argument("stream matrix must be square");
    }
    for (int j = 0; j < K; ++j) D.at(i + 1, j + 1) = rows[i][j];
  }
  D.validate();
  return D;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signal alignment for multi-user MIMO two-way relay networks";

  py::register_exception<GsaError>(m, "ConstructionError");

  py::class_<TolerancePolicy>(m, "TolerancePolicy")
      .def(py::init<>())
      .def_readwrite("rank_tol", &TolerancePolicy::rank_tol)
      .def_readwrite("residual_tol", &TolerancePolicy::residual_tol);

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init([](int K, int M, int N) {
             SystemConfig c{K, M, N};
             c.validate();
             return c;
           }),
           py::arg("K"), py::arg("M"), py::arg("N"))
      .def_readonly("K", &SystemConfig::K)
      .def_readonly("M", &SystemConfig::M)
      .def_readonly("N", &SystemConfig::N);

  py::class_<DataSwitchMatrix>(m, "StreamMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_static(
          "from_pattern",
          [](const std::string& model, int K, int streams, int L) {
            return make_pattern(to_pattern(model), K, streams, L);
          },
          py::arg("model"), py::arg("K"), py::arg("streams") = 1, py::arg("L") = 1)
      .def("at", [](const DataSwitchMatrix& d, int i, int j) { return d.at(i, j); },
           py::arg("i"), py::arg("j"))
      .def_property_readonly("K", [](const DataSwitchMatrix& d) { return d.K; })
      .def("total", &DataSwitchMatrix::d_total)
      .def("pairs", &DataSwitchMatrix::pairs);

  py::class_<ChannelRealization>(m, "ChannelRealization")
      .def_readonly("H", &ChannelRealization::H)
      .def_readonly("G", &ChannelRealization::G)
      .def_readonly("seed", &ChannelRealization::seed);

  py::class_<GsaDesign>(m, "Design")
      .def_readonly("P", &GsaDesign::P)
      .def_readonly("B", &GsaDesign::B)
      .def_readonly("route", &GsaDesign::route)
      .def_readonly("beta", &GsaDesign::beta)
      .def_readonly("q", &GsaDesign::q)
      .def_readonly("pair_order", &GsaDesign::pair_order)
      .def_readonly("served", &GsaDesign::served)
      .def("precoder",
           [](const GsaDesign& d, int i, int j) { return d.V.at({i, j}); },
           py::arg("sender"), py::arg("receiver"))
      .def("to_json", [](const GsaDesign& d) { return to_json(d).dump(); });

  py::class_<PairCheck>(m, "PairCheck")
      .def_readonly("pair", &PairCheck::pair)
      .def_readonly("rank", &PairCheck::rank)
      .def_readonly("required_max", &PairCheck::required_max)
      .def_readonly("null_dim", &PairCheck::null_dim)
      .def_readonly("satisfied", &PairCheck::satisfied);

  py::class_<AlignmentReport>(m, "AlignmentReport")
      .def_readonly("pairs", &AlignmentReport::pairs)
      .def_readonly("feasible", &AlignmentReport::feasible);

  py::class_<DofPlanePoint>(m, "PlanePoint")
      .def_property_readonly("ratio", [](const DofPlanePoint& p) { return p.ratio_d; })
      .def_property_readonly("dof_per_m",
                             [](const DofPlanePoint& p) { return p.dof_per_m_d; })
      .def_property_readonly("ratio_fraction",
                             [](const DofPlanePoint& p) -> py::object {
                               if (!p.ratio.exact) return py::none();
                               return py::make_tuple(p.ratio.num, p.ratio.den);
                             })
      .def_property_readonly("dof_per_m_fraction",
                             [](const DofPlanePoint& p) -> py::object {
                               if (!p.dof_per_m.exact) return py::none();
                               return py::make_tuple(p.dof_per_m.num, p.dof_per_m.den);
                             });

  py::class_<SimReport>(m, "SimReport")
      .def_readonly("feasible", &SimReport::feasible)
      .def_readonly("route", &SimReport::route)
      .def_readonly("failure", &SimReport::failure)
      .def_readonly("streams_requested", &SimReport::streams_requested)
      .def_readonly("streams_served", &SimReport::streams_served)
      .def_readonly("streams_delivered", &SimReport::streams_delivered)
      .def_readonly("dof_per_channel_use", &SimReport::dof_per_channel_use)
      .def_readonly("alignment_residual_max", &SimReport::alignment_residual_max)
      .def_readonly("b_condition", &SimReport::b_condition)
      .def_readonly("relay_error", &SimReport::relay_error)
      .def_readonly("user_error_max", &SimReport::user_error_max)
      .def_readonly("bc_dual", &SimReport::bc_dual)
      .def_readonly("seed", &SimReport::seed)
      .def("to_json", [](const SimReport& r) { return to_json(r).dump(); });

  py::class_<BatchReport>(m, "BatchReport")
      .def_readonly("runs", &BatchReport::runs)
      .def_readonly("failures", &BatchReport::failures)
      .def_readonly("modal_delivered", &BatchReport::modal_delivered)
      .def_readonly("median_relay_error", &BatchReport::median_relay_error)
      .def_readonly("max_user_error", &BatchReport::max_user_error)
      .def_readonly("min_dof", &BatchReport::min_dof)
      .def_readonly("median_dof", &BatchReport::median_dof)
      .def_readonly("max_dof", &BatchReport::max_dof);

  m.def("sample_channels",
        [](int K, int M, int N, std::uint64_t seed) {
          SystemConfig cfg{K, M, N};
          cfg.validate();
          return sample_channels(cfg, seed);
        },
        py::arg("K"), py::arg("M"), py::arg("N"), py::arg("seed"));

  m.def("cutset_bound", &cutset_bound, py::arg("K"), py::arg("M"), py::arg("N"));
  m.def("upper_bound",
        [](const std::string& model, int K, double M, double N) {
          return model_bound(to_pattern(model), K, M, N);
        },
        py::arg("model"), py::arg("K"), py::arg("M"), py::arg("N"));
  m.def("plane_points",
        [](const std::string& model, int K) { return model_points(to_pattern(model), K); },
        py::arg("model"), py::arg("K"));
  m.def("achievable_dof",
        [](const std::string& model, int K, double M, double N) {
          return achievable_dof(model_points(to_pattern(model), K), M, N);
        },
        py::arg("model"), py::arg("K"), py::arg("M"), py::arg("N"));
  m.def("asymptotic_dof", &asymptotic_dof, py::arg("ratio"));
  m.def("generic_feasible",
        [](const DataSwitchMatrix& D, int M, int N) { return theorem8_feasible(D, M, N); },
        py::arg("streams"), py::arg("M"), py::arg("N"));

  m.def("design",
        [](const ChannelRealization& ch, const DataSwitchMatrix& D, int M, int N,
           const std::string& model, const TolerancePolicy& tol) {
          return design_for_target(ch, D, M, N, to_pattern(model), tol);
        },
        py::arg("channels"), py::arg("streams"), py::arg("M"), py::arg("N"),
        py::arg("model") = "y", py::arg("tol") = TolerancePolicy{});
  m.def("check_alignment",
        [](const Matrix& P, const ChannelRealization& ch, const DataSwitchMatrix& D,
           const TolerancePolicy& tol) { return check_theorem4(P, ch, D, tol); },
        py::arg("P"), py::arg("channels"), py::arg("streams"),
        py::arg("tol") = TolerancePolicy{});
  m.def("symbol_extend", &symbol_extend, py::arg("channels"), py::arg("t"));

  m.def("run_once",
        [](int K, int M, int N, const DataSwitchMatrix& D, const std::string& model,
           std::uint64_t seed, double noise, int extension) {
          SystemConfig cfg{K, M, N};
          return run_once(cfg, D, to_pattern(model), seed, noise, {}, extension);
        },
        py::arg("K"), py::arg("M"), py::arg("N"), py::arg("streams"),
        py::arg("model") = "y", py::arg("seed") = 0, py::arg("noise") = 0.0,
        py::arg("extension") = 1);
  m.def("run_batch",
        [](int K, int M, int N, const DataSwitchMatrix& D, const std::string& model,
           std::uint64_t seed, int count, double noise, int extension) {
          SystemConfig cfg{K, M, N};
          return run_batch(cfg, D, to_pattern(model), seed, count, noise, {}, extension);
        },
        py::arg("K"), py::arg("M"), py::arg("N"), py::arg("streams"),
        py::arg("model") = "y", py::arg("seed") = 0, py::arg("count") = 1,
        py::arg("noise") = 0.0, py::arg("extension") = 1);
}
