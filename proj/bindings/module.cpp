#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattice_spectra/eigensolver.hpp"
#include "lattice_spectra/inequalities.hpp"
#include "lattice_spectra/operator.hpp"
#include "lattice_spectra/proof_internals.hpp"
#include "lattice_spectra/region.hpp"
#include "lattice_spectra/search.hpp"

namespace py = pybind11;
using namespace lspec;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirichlet Laplace eigenvalues and universal eigenvalue "
            "inequalities on integer lattices";

  py::class_<Region>(m, "Region")
      .def(py::init<int, std::vector<Point>>(), py::arg("n"), py::arg("points"))
      .def_property_readonly("n", &Region::dim)
      .def_property_readonly("points", &Region::points)
      .def("__len__", &Region::size)
      .def("index_of", &Region::index_of)
      .def("contains", &Region::contains)
      .def("__eq__", [](const Region& a, const Region& b) { return a == b; })
      .def("__repr__", [](const Region& r) {
        return "Region(n=" + std::to_string(r.dim()) +
               ", N=" + std::to_string(r.size()) + ")";
      });

  m.def("box_region", &box_region, py::arg("dims"));
  m.def("ball_region", [](int n, int radius, const Point& center,
                          const std::string& metric) {
          return ball_region(n, radius, center,
                             metric == "linf" ? BallMetric::linf
                                              : BallMetric::l1);
        },
        py::arg("n"), py::arg("radius"), py::arg("center"),
        py::arg("metric") = "l1");
  m.def("path_region", &path_region, py::arg("n"), py::arg("size"));
  m.def("random_connected_region", &random_connected_region, py::arg("n"),
        py::arg("size"), py::arg("seed"));
  m.def("boundary", [](const Region& r) { return boundary(r).points; });
  m.def("is_connected", &is_connected);
  m.def("neighbors_in", &neighbors_in);
  m.def("region_from_json", &region_from_json);
  m.def("region_to_json", &region_to_json, py::arg("region"),
        py::arg("manifest_ref") = "");

  py::class_<DirichletOperator>(m, "DirichletOperator")
      .def_property_readonly("region", &DirichletOperator::region)
      .def("__len__", &DirichletOperator::size)
      .def("entry", &DirichletOperator::entry)
      .def("apply", &DirichletOperator::apply)
      .def("dense", [](const DirichletOperator& op) {
        // nested row-major list; small matrices only
        const std::size_t N = op.size();
        const std::vector<double> a = op.dense();
        std::vector<std::vector<double>> rows(N, std::vector<double>(N));
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j) rows[i][j] = a[i * N + j];
        return rows;
      });

  m.def("assemble", &assemble);
  m.def("weighted_inner", &weighted_inner);
  m.def("gamma_form", &gamma_form);
  m.def("green_residual", &green_residual);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("vectors", &Spectrum::vectors)
      .def_readonly("n", &Spectrum::n)
      .def_readonly("N", &Spectrum::N);

  py::class_<SolverDiagnostics>(m, "SolverDiagnostics")
      .def_readonly("max_residual", &SolverDiagnostics::max_residual)
      .def_readonly("max_ortho_defect", &SolverDiagnostics::max_ortho_defect)
      .def_readonly("min_eigenvalue", &SolverDiagnostics::min_eigenvalue)
      .def_readonly("max_eigenvalue", &SolverDiagnostics::max_eigenvalue);

  m.def("full_spectrum", &full_spectrum);
  m.def("box_spectrum_oracle", &box_spectrum_oracle);
  m.def("spectral_checks", &spectral_checks);

  py::class_<InequalityRecord>(m, "InequalityRecord")
      .def_readonly("inequality_id", &InequalityRecord::inequality_id)
      .def_readonly("k", &InequalityRecord::k)
      .def_readonly("lhs", &InequalityRecord::lhs)
      .def_readonly("rhs", &InequalityRecord::rhs)
      .def_readonly("slack", &InequalityRecord::slack)
      .def_readonly("precondition_met", &InequalityRecord::precondition_met)
      .def_readonly("pass_", &InequalityRecord::pass)
      .def("__repr__", [](const InequalityRecord& r) {
        return "InequalityRecord(" + r.inequality_id +
               ", k=" + std::to_string(r.k) + ", slack=" +
               std::to_string(r.slack) + ")";
      });

  m.def("full_report", &full_report, py::arg("spectrum"), py::arg("connected"));
  m.def("check_ppw", &check_ppw);
  m.def("check_hp", &check_hp);
  m.def("check_yang1", &check_yang1);
  m.def("check_yang2", &check_yang2);
  m.def("check_bipartite_symmetry", &check_bipartite_symmetry);
  m.def("check_partial_sums", &check_partial_sums);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](int n, std::size_t region_size,
                       const std::string& inequality_id, int k, int steps,
                       double t0, double decay, std::uint64_t seed) {
             return SearchConfig{n, region_size, inequality_id,
                                 k, steps, t0, decay, seed};
           }),
           py::arg("n"), py::arg("region_size"), py::arg("inequality_id"),
           py::arg("k"), py::arg("steps") = 100, py::arg("t0") = -1.0,
           py::arg("decay") = 0.995, py::arg("seed") = 0);

  py::class_<SearchTrace>(m, "SearchTrace")
      .def_readonly("best_region", &SearchTrace::best_region)
      .def_readonly("best_slack", &SearchTrace::best_slack)
      .def_property_readonly("objectives", [](const SearchTrace& t) {
        std::vector<double> out;
        for (const auto& e : t.steps) out.push_back(e.objective);
        return out;
      });

  m.def("slack_objective", &slack_objective);
  m.def("anneal", &anneal);
}
