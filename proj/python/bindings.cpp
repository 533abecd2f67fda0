#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bosonic/anticoncentration.hpp"
#include "bosonic/errors.hpp"
#include "bosonic/irreps.hpp"
#include "bosonic/moments.hpp"

namespace py = pybind11;
using namespace bosonic;

namespace {

// Exact values cross the boundary as (numerator, denominator) decimal strings.
std::pair<std::string, std::string> parts(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

Occupation occ(const std::vector<unsigned>& counts) { return Occupation(counts); }

py::dict estimate(const MomentEstimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["variance"] = e.variance;
  d["std_error"] = e.std_error;
  d["samples"] = e.samples;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Haar second moments and outcome-collision probabilities for boson sampling";

  py::register_exception<DegenerateModesError>(m, "DegenerateModesError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("p2_closed", [](unsigned modes, unsigned photons) { return parts(p2_closed(modes, photons)); },
        py::arg("m"), py::arg("n"));
  m.def("p2_beta", [](unsigned modes, unsigned photons) { return parts(p2_beta(modes, photons)); },
        py::arg("m"), py::arg("n"));
  m.def("p2_integral", &p2_integral, py::arg("m"), py::arg("n"), py::arg("tolerance") = 1e-10,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "mc_p2",
      [](unsigned modes, unsigned photons, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
        MomentEstimate e;
        {
          py::gil_scoped_release release;
          e = mc_p2(modes, photons, samples, seed, workers);
        }
        return estimate(e);
      },
      py::arg("m"), py::arg("n"), py::arg("samples") = 10000, py::arg("seed") = 1, py::arg("workers") = 1);
  m.def("dawson", &dawson, py::arg("y"));
  m.def("asymptote", &asymptote, py::arg("m"), py::arg("n"), py::arg("c"), py::arg("beta"));
  m.def("asymptote_for", &asymptote_for, py::arg("m"), py::arg("n"));
  m.def("regime", [](unsigned modes, unsigned photons) { return to_string(classify_regime(modes, photons).regime); },
        py::arg("m"), py::arg("n"));
  m.def("pz_bound", &pz_bound, py::arg("m"), py::arg("n"), py::arg("alpha"));
  m.def("collision_free_ratio",
        [](unsigned modes, unsigned photons) { return parts(collision_free_ratio(modes, photons)); },
        py::arg("m"), py::arg("n"));

  m.def("irrep_dim", [](unsigned modes, unsigned k) { return irrep_dim(modes, k).get_str(); }, py::arg("m"),
        py::arg("k"));
  m.def("alpha", [](unsigned r, unsigned j, unsigned n, unsigned modes) { return parts(alpha(r, j, n, modes)); },
        py::arg("r"), py::arg("j"), py::arg("n"), py::arg("m"));
  m.def("beta", [](unsigned r, unsigned k, unsigned modes) { return parts(beta(r, k, modes)); }, py::arg("r"),
        py::arg("k"), py::arg("m"));
  m.def("g_fock", [](const std::vector<unsigned>& r, unsigned l) { return g_fock(occ(r), l).get_str(); },
        py::arg("occupation"), py::arg("l"));
  m.def("g_fock_sum",
        [](unsigned modes, unsigned photons, unsigned k) { return parts(g_fock_sum(modes, photons, k)); },
        py::arg("m"), py::arg("n"), py::arg("k"));
  m.def(
      "irrep_norms",
      [](const std::vector<unsigned>& r) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& q : irrep_norms_closed(DiagonalOperator::fock_projector(occ(r)))) out.push_back(parts(q));
        return out;
      },
      py::arg("occupation"));
  m.def(
      "second_moment",
      [](const std::vector<unsigned>& in, const std::vector<unsigned>& out) {
        return parts(fock_second_moment(occ(in), occ(out)));
      },
      py::arg("input"), py::arg("output"));
  m.def(
      "mc_second_moment",
      [](const std::vector<unsigned>& in, const std::vector<unsigned>& out, std::uint64_t samples,
         std::uint64_t seed, unsigned workers) {
        MomentEstimate e;
        {
          py::gil_scoped_release release;
          e = mc_second_moment(occ(in), occ(out), samples, seed, workers);
        }
        return estimate(e);
      },
      py::arg("input"), py::arg("output"), py::arg("samples") = 10000, py::arg("seed") = 1,
      py::arg("workers") = 1);
}
