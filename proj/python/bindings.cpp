#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fppcert/dataset.hpp"
#include "fppcert/lattice.hpp"
#include "fppcert/pipeline.hpp"

namespace py = pybind11;
using namespace fpp;

namespace {

RunConfig make_config(u32 prime, std::optional<u32> root, std::uint64_t seed, int samples, bool conjugate,
                      int threads) {
    RunConfig c;
    c.prime = prime;
    c.sqrt_minus7 = root;
    c.seed = seed;
    c.samples = samples;
    c.conjugate = conjugate;
    c.threads = threads > 0 ? threads : worker_threads_from_env();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact certification checks for the 84-cubic surface and its sextic model";
    m.attr("__version__") = toolkit_version();

    auto base = py::register_exception<Error>(m, "FppError");
    py::register_exception<ConfigError>(m, "ConfigError", base);

    m.def("check_ids", &all_check_ids, "Every check id in report order");
    m.def("checks_for_subcommand", &checks_for_subcommand, py::arg("name"));
    m.def("find_sqrt_minus7", &find_sqrt_minus7, py::arg("p"), "Smallest r with r^2 = -7 mod p, or None");
    m.def("seventh_root_exponent", &seventh_root_exponent, py::arg("p"));

    m.def(
        "equations_text",
        [](bool conjugate) {
            return canonical_serialize(conjugate ? conjugate_all(fpp_equations()) : fpp_equations()).text;
        },
        py::arg("conjugate") = false, "The 84 cubics, one per line, in canonical form");
    m.def(
        "dataset_sha256",
        [](bool conjugate) {
            return canonical_serialize(conjugate ? conjugate_all(fpp_equations()) : fpp_equations()).sha256;
        },
        py::arg("conjugate") = false);

    m.def(
        "run_checks_json",
        [](const std::vector<std::string>& ids, u32 prime, std::optional<u32> root, std::uint64_t seed, int samples,
           bool conjugate, int threads) {
            RunConfig c = make_config(prime, root, seed, samples, conjugate, threads);
            py::gil_scoped_release release;
            return run_checks(c, ids).to_json().dump();
        },
        py::arg("ids"), py::arg("prime") = 263, py::arg("sqrt_minus7") = py::none(), py::arg("seed") = 42,
        py::arg("samples") = 100, py::arg("conjugate") = false, py::arg("threads") = 0);

    m.def(
        "sample_points",
        [](u32 prime, std::optional<u32> root, std::uint64_t seed, int samples, bool conjugate) {
            auto pts = sample_surface_points(sampling_params(make_config(prime, root, seed, samples, conjugate, 1)));
            std::vector<std::tuple<u32, u32, u32, u32>> out;
            for (auto& p : pts) out.emplace_back(p.Y0, p.Y2, p.Y3, p.z);
            return out;
        },
        py::arg("prime") = 263, py::arg("sqrt_minus7") = py::none(), py::arg("seed") = 42, py::arg("samples") = 100,
        py::arg("conjugate") = false, "Sampled (Y0, Y2, Y3, z) tuples");

    m.def("lattice_csv", [] { return lattice_csv(enumerate_configurations()); });
    m.def(
        "gram_matrix",
        [](int case_id, const std::array<int, 6>& a, int s_self) {
            GramOptions o;
            o.s_self = s_self;
            return build_gram({case_id, a}, o);
        },
        py::arg("case_id"), py::arg("assignment"), py::arg("s_self") = -3);
    m.def("integer_rank", &integer_rank);
}
