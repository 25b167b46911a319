// Python bindings for the cvclone core: label-space cloning arithmetic, the
// truncated-Fock validator, and the estimation Monte Carlo.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvclone/clone_engine.hpp"
#include "cvclone/estimation.hpp"
#include "cvclone/fock.hpp"
#include "cvclone/states.hpp"
#include "cvclone/version.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coherent-state information-cloning simulator";
    m.attr("__version__") = cvclone::kVersion;

    py::register_exception<cvclone::ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    // ---- states ----
    py::class_<cvclone::ProductCoherentState>(m, "ProductCoherentState")
        .def(py::init<std::vector<cvclone::ComplexAmplitude>>(), py::arg("labels"))
        .def_static("cloning_input", &cvclone::ProductCoherentState::cloning_input,
                    py::arg("alpha"), py::arg("beta"), py::arg("n_clones"),
                    "Mode 0 = alpha, n_clones ancillas all = beta.")
        .def_readonly("labels", &cvclone::ProductCoherentState::labels)
        .def("n_modes", &cvclone::ProductCoherentState::n_modes)
        .def("n_ancillas", &cvclone::ProductCoherentState::n_ancillas)
        .def("__repr__", [](const cvclone::ProductCoherentState& s) {
            return "ProductCoherentState(" + std::to_string(s.n_modes()) + " modes)";
        });

    m.def("overlap_sq", &cvclone::overlap_sq, py::arg("mu"), py::arg("nu"),
          "|<mu|nu>|^2 = exp(-|mu - nu|^2)");
    m.def("product_overlap_sq", &cvclone::product_overlap_sq, py::arg("psi"),
          py::arg("psi_prime"));
    m.def("scaling_overlap_discrepancy", &cvclone::scaling_overlap_discrepancy,
          py::arg("lam"), py::arg("alpha"), py::arg("beta"),
          "Overlap mismatch a universal scaling by lam would introduce.");
    m.def("fidelity_to", &cvclone::fidelity_to, py::arg("psi"), py::arg("psi_prime"));

    // ---- clone engine ----
    py::class_<cvclone::CloneGenerator>(m, "CloneGenerator")
        .def_readonly("n_clones", &cvclone::CloneGenerator::n_clones)
        .def_readonly("weights", &cvclone::CloneGenerator::weights)
        .def_readonly("matrix", &cvclone::CloneGenerator::matrix);

    py::class_<cvclone::LabelRotation>(m, "LabelRotation")
        .def_readonly("matrix", &cvclone::LabelRotation::matrix)
        .def("n_modes", &cvclone::LabelRotation::n_modes);

    py::class_<cvclone::OverlapCheck>(m, "OverlapCheck")
        .def_readonly("before", &cvclone::OverlapCheck::before)
        .def_readonly("after", &cvclone::OverlapCheck::after)
        .def_readonly("abs_diff", &cvclone::OverlapCheck::abs_diff)
        .def("__repr__", [](const cvclone::OverlapCheck& c) {
            return "OverlapCheck(before=" + std::to_string(c.before) +
                   ", after=" + std::to_string(c.after) + ")";
        });

    m.def("build_generator", &cvclone::build_generator, py::arg("n_clones"),
          py::arg("weights") = std::nullopt);
    m.def("exponentiate", &cvclone::exponentiate, py::arg("gen"));
    m.def("apply_clone_map", &cvclone::apply_clone_map, py::arg("psi"), py::arg("rotation"));
    m.def("verify_overlap_preservation", &cvclone::verify_overlap_preservation,
          py::arg("psi"), py::arg("psi_prime"), py::arg("rotation"));
    m.def("attenuation_factor", &cvclone::attenuation_factor, py::arg("n_clones"));

    // ---- fock oracle ----
    py::class_<cvclone::FockSpace>(m, "FockSpace")
        .def(py::init<int, int>(), py::arg("cutoff"), py::arg("n_modes"))
        .def(py::init<int, int, std::int64_t>(), py::arg("cutoff"), py::arg("n_modes"),
             py::arg("max_amplitudes"))
        .def_readonly("cutoff", &cvclone::FockSpace::cutoff)
        .def_readonly("n_modes", &cvclone::FockSpace::n_modes)
        .def("dim", &cvclone::FockSpace::dim)
        .def("mode_stride", &cvclone::FockSpace::mode_stride, py::arg("mode"))
        .def("occupation", &cvclone::FockSpace::occupation, py::arg("index"), py::arg("mode"))
        .def("__repr__", [](const cvclone::FockSpace& s) {
            return "FockSpace(cutoff=" + std::to_string(s.cutoff) +
                   ", n_modes=" + std::to_string(s.n_modes) + ")";
        });

    py::class_<cvclone::StateVector>(m, "StateVector")
        .def_readonly("space", &cvclone::StateVector::space)
        .def_readonly("amplitudes", &cvclone::StateVector::amplitudes)
        .def("norm", &cvclone::StateVector::norm);

    m.def("annihilation_matrix", &cvclone::annihilation_matrix, py::arg("space"),
          py::arg("mode"));
    m.def("creation_matrix", &cvclone::creation_matrix, py::arg("space"), py::arg("mode"));
    m.def("generator_matrix", &cvclone::generator_matrix, py::arg("space"), py::arg("gen"));
    m.def("coherent_vector", &cvclone::coherent_vector, py::arg("space"), py::arg("labels"));
    m.def("build_unitary", &cvclone::build_unitary, py::arg("space"), py::arg("gen"));
    m.def("apply_unitary", &cvclone::apply_unitary, py::arg("space"), py::arg("gen"),
          py::arg("psi"), py::arg("inverse") = false);
    m.def("fidelity", &cvclone::fidelity, py::arg("v"), py::arg("w"));
    m.def("coherent_truncation_weight", &cvclone::coherent_truncation_weight, py::arg("mu"),
          py::arg("cutoff"));
    m.def("truncation_suspect", &cvclone::truncation_suspect, py::arg("space"),
          py::arg("labels"));

    // ---- estimation ----
    py::class_<cvclone::GaussianStream>(m, "GaussianStream")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream_id"))
        .def("next_pair", &cvclone::GaussianStream::next_pair);

    py::class_<cvclone::HeterodyneSample>(m, "HeterodyneSample")
        .def(py::init([](cvclone::ComplexAmplitude z) {
                 return cvclone::HeterodyneSample{z};
             }),
             py::arg("z"))
        .def_readonly("z", &cvclone::HeterodyneSample::z);

    py::class_<cvclone::TrialStatistics>(m, "TrialStatistics")
        .def_readonly("n_trials", &cvclone::TrialStatistics::n_trials)
        .def_readonly("mean_est", &cvclone::TrialStatistics::mean_est)
        .def_readonly("std_re", &cvclone::TrialStatistics::std_re)
        .def_readonly("std_im", &cvclone::TrialStatistics::std_im)
        .def(py::self == py::self)
        .def("__repr__", [](const cvclone::TrialStatistics& t) {
            return "TrialStatistics(n_trials=" + std::to_string(t.n_trials) + ", std_re=" +
                   std::to_string(t.std_re) + ", std_im=" + std::to_string(t.std_im) + ")";
        });

    m.def("sample_heterodyne", &cvclone::sample_heterodyne, py::arg("mu"), py::arg("rng"));
    m.def("estimate_alpha", &cvclone::estimate_alpha, py::arg("samples"),
          py::arg("n_clones"));
    m.def("run_trials", &cvclone::run_trials, py::arg("alpha"), py::arg("n_clones"),
          py::arg("n_trials"), py::arg("seed"));
    m.def("run_control_trials", &cvclone::run_control_trials, py::arg("alpha"),
          py::arg("n_copies"), py::arg("n_trials"), py::arg("seed"));
}
