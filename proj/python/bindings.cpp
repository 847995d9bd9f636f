// Python bindings. Reports cross the boundary as JSON text and are decoded
// by the package wrapper, so Python sees exactly what the CLI prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "terracini/bounds.hpp"
#include "terracini/catalog.hpp"
#include "terracini/certify.hpp"
#include "terracini/report.hpp"
#include "terracini/tangency.hpp"
#include "terracini/terracini.hpp"
#include "terracini/witness.hpp"

namespace py = pybind11;
using namespace terracini;

namespace {

SampleOptions options(std::uint64_t seed, int trials) {
  SampleOptions o;
  o.seed = seed;
  o.trials = trials;
  return o;
}

std::string wrap(const std::string& command, const Json& args, const SampleOptions& opt, const Json& result) {
  return envelope(command, args, opt, result).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("version") = kVersion;
  m.attr("schema_version") = kSchemaVersion;
  m.attr("default_seed") = kDefaultSeed;

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<Refused>(m, "Refused", PyExc_RuntimeError);

  m.def("describe", [](const std::string& spec, std::uint64_t seed) {
    return to_json(resolve_variety(spec, seed)).dump();
  }, py::arg("spec"), py::arg("seed") = kDefaultSeed);

  m.def("defect", [](const std::string& spec, int h, std::uint64_t seed, int trials) {
    auto opt = options(seed, trials);
    auto x = resolve_variety(spec, seed);
    py::gil_scoped_release release;
    return wrap("defect", {{"variety", x.id}, {"h", h}}, opt, to_json(secant_dim(x, h, opt)));
  }, py::arg("spec"), py::arg("h"), py::arg("seed") = kDefaultSeed, py::arg("trials") = 3);

  m.def("gauss", [](const std::string& spec, std::uint64_t seed, int trials) {
    auto opt = options(seed, trials);
    auto x = resolve_variety(spec, seed);
    py::gil_scoped_release release;
    return wrap("gauss", {{"variety", x.id}}, opt, to_json(gauss_rank(x, opt)));
  }, py::arg("spec"), py::arg("seed") = kDefaultSeed, py::arg("trials") = 3);

  m.def("contact", [](const std::string& spec, int h, std::uint64_t seed, int trials) {
    auto opt = options(seed, trials);
    auto x = resolve_variety(spec, seed);
    py::gil_scoped_release release;
    return wrap("contact", {{"variety", x.id}, {"h", h}}, opt, to_json(contact_locus_dim(x, h, opt)));
  }, py::arg("spec"), py::arg("h"), py::arg("seed") = kDefaultSeed, py::arg("trials") = 3);

  m.def("certify", [](const std::string& spec, int h, bool with_contact, std::uint64_t seed, int trials) {
    CertifyOptions co;
    co.sample = options(seed, trials);
    co.with_contact = with_contact;
    auto x = resolve_variety(spec, seed);
    py::gil_scoped_release release;
    return wrap("certify", {{"variety", x.id}, {"h", h}, {"contact", with_contact}}, co.sample,
                to_json(cmd_certify(x, h, co)));
  }, py::arg("spec"), py::arg("h"), py::arg("contact") = false, py::arg("seed") = kDefaultSeed,
     py::arg("trials") = 3);

  m.def("verify_mainA", [](int N, int r, std::uint64_t seed, int trials) {
    auto opt = options(seed, trials);
    py::gil_scoped_release release;
    return wrap("witness", {{"mode", "mainA"}, {"N", N}, {"r", r}}, opt, to_json(verify_mainA(N, r, opt)));
  }, py::arg("N"), py::arg("r"), py::arg("seed") = kDefaultSeed, py::arg("trials") = 3);

  m.def("bound_segre_veronese", [](const std::vector<int>& ns, const std::vector<int>& ds) {
    return to_json(bound_segre_veronese(ns, ds)).dump();
  });
  m.def("bound_binary_sv", [](const std::vector<int>& ds) { return to_json(bound_binary_sv(ds)).dump(); });
  m.def("bound_grassmannian", [](int r, int n) { return to_json(bound_grassmannian(r, n)).dump(); });
  m.def("bound_g2n", [](int n) { return to_json(bound_g2n(n)).dump(); });
  m.def("bound_lagrangian_spinor", [](int n, const std::string& e) {
    return to_json(bound_lagrangian_spinor(n, parse_embedding(e))).dump();
  });
  m.def("bound_moments", [](int d) { return to_json(bound_moments(d)).dump(); });
  m.def("bound_powers", [](int a, int d, int n) { return to_json(bound_powers(a, d, n)).dump(); });
}
