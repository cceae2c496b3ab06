// Python bindings for the core analysis: point clouds, neighbor queries,
// autoparallel tracing, fiber projection, the full pipeline, dataset
// generators and file IO. Eigen types cross the boundary as numpy arrays.

#include "papa/datasets.hpp"
#include "papa/errors.hpp"
#include "papa/io.hpp"
#include "papa/local_frame.hpp"
#include "papa/neighbors.hpp"
#include "papa/pipeline.hpp"
#include "papa/projection.hpp"
#include "papa/tracer.hpp"
#include "papa/types.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace papa;

namespace {

RowMatrix stack_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return RowMatrix(0, 0);
  RowMatrix out(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = rows[i];
  }
  return out;
}

RowMatrix trace_field(const AutoparallelTrace& trace, bool directions) {
  std::vector<Vector> rows;
  rows.reserve(trace.states.size());
  for (const TraceState& s : trace.states) {
    rows.push_back(directions ? s.direction : s.position);
  }
  return stack_rows(rows);
}

}  // namespace

PYBIND11_MODULE(_papa, m) {
  m.doc() = "Principal autoparallel analysis for point-cloud manifolds";

  py::register_exception<NumericsError>(m, "NumericsError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    }
  });

  py::class_<PointCloud>(m, "PointCloud")
      .def(py::init<RowMatrix, std::vector<std::string>>(), py::arg("points"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("size", &PointCloud::size)
      .def_property_readonly("dimension", &PointCloud::dimension)
      .def("point", &PointCloud::point, py::arg("i"))
      .def_property_readonly("points",
                             [](const PointCloud& c) { return c.points(); })
      .def_property_readonly("labels",
                             [](const PointCloud& c) { return c.labels(); })
      .def("__len__", &PointCloud::size)
      .def("__repr__", [](const PointCloud& c) {
        return "PointCloud(" + std::to_string(c.size()) + " points, dimension " +
               std::to_string(c.dimension()) + ")";
      });

  py::class_<NeighborhoodSpec>(m, "NeighborhoodSpec")
      .def(py::init<>())
      .def(py::init([](double radius, int min_neighbors,
                       std::optional<int> max_neighbors) {
             NeighborhoodSpec spec;
             spec.radius = radius;
             spec.min_neighbors = min_neighbors;
             spec.max_neighbors = max_neighbors;
             return spec;
           }),
           py::arg("radius"), py::arg("min_neighbors") = 3,
           py::arg("max_neighbors") = std::nullopt)
      .def_readwrite("radius", &NeighborhoodSpec::radius)
      .def_readwrite("min_neighbors", &NeighborhoodSpec::min_neighbors)
      .def_readwrite("max_neighbors", &NeighborhoodSpec::max_neighbors);

  py::class_<Neighbor>(m, "Neighbor")
      .def_readonly("index", &Neighbor::index)
      .def_readonly("distance", &Neighbor::distance)
      .def("__repr__", [](const Neighbor& n) {
        return "Neighbor(index=" + std::to_string(n.index) + ", distance=" +
               std::to_string(n.distance) + ")";
      });

  py::class_<SpatialIndex>(m, "SpatialIndex")
      .def(py::init<PointCloud>(), py::arg("cloud"))
      .def("radius_query", &SpatialIndex::radius_query, py::arg("center"),
           py::arg("radius"))
      .def_property_readonly("size", &SpatialIndex::size)
      .def_property_readonly("dimension", &SpatialIndex::dimension);

  py::class_<DistanceHistogram>(m, "DistanceHistogram")
      .def_readonly("bin_edges", &DistanceHistogram::bin_edges)
      .def_readonly("counts", &DistanceHistogram::counts)
      .def_readonly("origin_index", &DistanceHistogram::origin_index);

  m.def("distance_histogram", &distance_histogram, py::arg("cloud"),
        py::arg("origin_index"), py::arg("bin_width"));
  m.def("estimate_radius", &estimate_radius, py::arg("histogram"));

  py::class_<LocalMoments>(m, "LocalMoments")
      .def_readonly("mean", &LocalMoments::mean)
      .def_readonly("covariance", &LocalMoments::covariance)
      .def_readonly("support", &LocalMoments::support);

  m.def("local_covariance", &local_covariance, py::arg("index"),
        py::arg("center"), py::arg("spec"));

  py::class_<PrincipalDirection>(m, "PrincipalDirection")
      .def_readonly("direction", &PrincipalDirection::direction)
      .def_readonly("spectrum", &PrincipalDirection::spectrum);

  m.def("first_principal_direction", &first_principal_direction,
        py::arg("covariance"), py::arg("reference") = std::nullopt);

  py::class_<LocalBasis>(m, "LocalBasis")
      .def_readonly("directions", &LocalBasis::directions)
      .def_readonly("spectrum", &LocalBasis::spectrum);

  m.def("principal_directions", &principal_directions, py::arg("covariance"));

  py::class_<FrameEstimate>(m, "FrameEstimate")
      .def_readonly("origin", &FrameEstimate::origin)
      .def_readonly("direction", &FrameEstimate::direction)
      .def_readonly("spectrum", &FrameEstimate::spectrum)
      .def_readonly("support", &FrameEstimate::support);

  m.def("frame_at", &frame_at, py::arg("index"), py::arg("center"),
        py::arg("spec"), py::arg("reference") = std::nullopt);

  py::class_<TraceConfig>(m, "TraceConfig")
      .def(py::init<>())
      .def_readwrite("step", &TraceConfig::step)
      .def_readwrite("max_steps_each_way", &TraceConfig::max_steps_each_way)
      .def_readwrite("spec", &TraceConfig::spec)
      .def_readwrite("tie_threshold", &TraceConfig::tie_threshold)
      .def_readwrite("stop_on_isotropy", &TraceConfig::stop_on_isotropy);

  py::class_<TraceState>(m, "TraceState")
      .def_readonly("position", &TraceState::position)
      .def_readonly("direction", &TraceState::direction)
      .def_readonly("arc_length", &TraceState::arc_length);

  py::class_<AutoparallelTrace>(m, "AutoparallelTrace")
      .def_readonly("states", &AutoparallelTrace::states)
      .def_readonly("seed_state", &AutoparallelTrace::seed_state)
      .def_readonly("seed_index", &AutoparallelTrace::seed_index)
      .def_readonly("step", &AutoparallelTrace::step)
      .def_property_readonly("forward_termination",
                             [](const AutoparallelTrace& t) {
                               return to_string(t.forward_termination);
                             })
      .def_property_readonly("backward_termination",
                             [](const AutoparallelTrace& t) {
                               return to_string(t.backward_termination);
                             })
      .def_property_readonly("positions",
                             [](const AutoparallelTrace& t) {
                               return trace_field(t, false);
                             })
      .def_property_readonly("directions",
                             [](const AutoparallelTrace& t) {
                               return trace_field(t, true);
                             })
      .def_property_readonly("arc_lengths", [](const AutoparallelTrace& t) {
        std::vector<double> arcs;
        arcs.reserve(t.states.size());
        for (const TraceState& s : t.states) arcs.push_back(s.arc_length);
        return arcs;
      });

  m.def("trace_autoparallel", &trace_autoparallel, py::arg("index"),
        py::arg("seed"), py::arg("config"), py::arg("seed_index") = -1,
        py::arg("seed_reference") = std::nullopt);

  m.def("nonholonomic_map", &nonholonomic_map, py::arg("trace"));

  py::class_<LoopDefect>(m, "LoopDefect")
      .def_readonly("defect", &LoopDefect::defect)
      .def_readonly("norm", &LoopDefect::norm);

  m.def("loop_defect", &loop_defect, py::arg("index"), py::arg("origin"),
        py::arg("spec"), py::arg("epsilon"), py::arg("tie_threshold") = 0.05);

  py::class_<BaseSpace>(m, "BaseSpace")
      .def(py::init<Vector, Vector>(), py::arg("anchor"), py::arg("normal"))
      .def_property_readonly("anchor", &BaseSpace::anchor)
      .def_property_readonly("normal", &BaseSpace::normal)
      .def_property_readonly("dimension", &BaseSpace::dimension)
      .def("offset", [](const BaseSpace& b, const Vector& x) {
        return b.offset(x);
      }, py::arg("x"));

  py::class_<MedoidOrthogonal>(m, "MedoidOrthogonal").def(py::init<>());
  py::class_<UserSupplied>(m, "UserSupplied")
      .def(py::init([](Vector anchor, Vector normal) {
             return UserSupplied{std::move(anchor), std::move(normal)};
           }),
           py::arg("anchor"), py::arg("normal"))
      .def_readwrite("anchor", &UserSupplied::anchor)
      .def_readwrite("normal", &UserSupplied::normal);

  py::class_<FiberProjection>(m, "FiberProjection")
      .def_readonly("point_index", &FiberProjection::point_index)
      .def_readonly("intersection", &FiberProjection::intersection)
      .def_readonly("signed_distance", &FiberProjection::signed_distance);

  py::class_<ProjectionResult>(m, "ProjectionResult")
      .def_readonly("projections", &ProjectionResult::projections)
      .def_readonly("residual", &ProjectionResult::residual)
      .def_readonly("failures", &ProjectionResult::failures);

  m.def("choose_base_space", &choose_base_space, py::arg("cloud"),
        py::arg("traces"), py::arg("strategy"));
  m.def("base_space_chart", &base_space_chart, py::arg("base"));
  m.def("to_chart", &to_chart, py::arg("base"), py::arg("chart"),
        py::arg("ambient"));
  m.def("project_point", &project_point, py::arg("index"),
        py::arg("point_index"), py::arg("base"), py::arg("config"),
        py::arg("seed_reference") = std::nullopt);
  m.def("project_all", &project_all, py::arg("index"), py::arg("base"),
        py::arg("config"));

  py::class_<IsotropyResult>(m, "IsotropyResult")
      .def_readonly("statistic", &IsotropyResult::statistic)
      .def_readonly("is_isotropic", &IsotropyResult::is_isotropic);

  m.def("isotropy_test", &isotropy_test, py::arg("cloud"), py::arg("spec"),
        py::arg("n_probes"), py::arg("seed"), py::arg("threshold") = 1.5);

  py::class_<PapaConfig>(m, "PapaConfig")
      .def(py::init<>())
      .def_readwrite("trace", &PapaConfig::trace)
      .def_readwrite("levels", &PapaConfig::levels)
      .def_readwrite("base_strategies", &PapaConfig::base_strategies)
      .def_readwrite("radius", &PapaConfig::radius)
      .def_readwrite("histogram_bins", &PapaConfig::histogram_bins)
      .def_readwrite("check_isotropy", &PapaConfig::check_isotropy)
      .def_readwrite("isotropy_threshold", &PapaConfig::isotropy_threshold)
      .def_readwrite("isotropy_probes", &PapaConfig::isotropy_probes)
      .def_readwrite("seed", &PapaConfig::seed);

  py::class_<PapaLevel>(m, "PapaLevel")
      .def_readonly("base", &PapaLevel::base)
      .def_readonly("chart", &PapaLevel::chart)
      .def_readonly("point_indices", &PapaLevel::point_indices)
      .def_readonly("coordinates", &PapaLevel::coordinates)
      .def_readonly("residual", &PapaLevel::residual);

  py::class_<PapaModel>(m, "PapaModel")
      .def_readonly("levels", &PapaModel::levels)
      .def_property_readonly("stop_reason", [](const PapaModel& model) {
        return to_string(model.stop_reason);
      });

  m.def("run_papa", &run_papa, py::arg("cloud"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<LabeledSample>(m, "LabeledSample")
      .def_readonly("point", &LabeledSample::point)
      .def_readonly("params", &LabeledSample::params)
      .def_readonly("noise_sigma", &LabeledSample::noise_sigma);

  py::class_<GeneratedDataset>(m, "GeneratedDataset")
      .def_readonly("cloud", &GeneratedDataset::cloud)
      .def_readonly("samples", &GeneratedDataset::samples)
      .def_property_readonly("params", [](const GeneratedDataset& d) {
        std::vector<Vector> rows;
        rows.reserve(d.samples.size());
        for (const LabeledSample& s : d.samples) rows.push_back(s.params);
        return stack_rows(rows);
      });

  m.def("gen_zigzag", &gen_zigzag, py::arg("n"), py::arg("noise_sigma"),
        py::arg("seed"));
  m.def("gen_boomerang", &gen_boomerang, py::arg("n"), py::arg("noise_sigma"),
        py::arg("seed"));
  m.def("gen_swiss_roll", &gen_swiss_roll, py::arg("n"), py::arg("noise_sigma"),
        py::arg("seed"), py::arg("scale") = 0.1);
  m.def("zigzag_point", &zigzag_point, py::arg("t"));
  m.def("boomerang_point", &boomerang_point, py::arg("component"), py::arg("t"));
  m.def("swiss_roll_point", &swiss_roll_point, py::arg("t"), py::arg("y"),
        py::arg("scale"));

  m.def("load_delimited", &load_delimited, py::arg("path"),
        py::arg("delimiter") = ',', py::arg("has_header") = false,
        py::arg("label_column") = std::nullopt);
  m.def("save_model", &save_model, py::arg("directory"), py::arg("model"),
        py::arg("config_echo_json"));
  m.def("format_double", &format_double, py::arg("x"));
}
