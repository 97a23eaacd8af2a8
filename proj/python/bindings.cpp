#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twinned/commands.hpp"
#include "twinned/errors.hpp"

namespace py = pybind11;

namespace {

twinned::Poset poset(const std::string& text) { return twinned::parse_poset(text); }

// Reports cross the boundary as JSON text; the Python package decodes them.
py::tuple result(const twinned::CommandResult& r) { return py::make_tuple(r.report.dump(), r.text, r.exit_code); }

}  // namespace

PYBIND11_MODULE(_twinned, m) {
  m.doc() = "Twinned order polytopes: interior test, toric Groebner bases, Ehrhart data";
  py::register_exception<twinned::InputError>(m, "InputError", PyExc_ValueError);

  m.def(
      "analyze", [](const std::string& p, const std::string& q) { return result(twinned::cmd_analyze(poset(p), poset(q))); },
      py::arg("p"), py::arg("q"));

  m.def(
      "groebner",
      [](const std::string& p, const std::string& q, std::optional<std::string> order) {
        return result(twinned::cmd_groebner(poset(p), poset(q), order));
      },
      py::arg("p"), py::arg("q"), py::arg("order") = py::none());

  m.def(
      "delta",
      [](const std::string& p, const std::string& q, std::optional<int> t_max, int d_cap) {
        twinned::DeltaOptions opt;
        opt.t_max = t_max;
        opt.d_cap = d_cap;
        return result(twinned::cmd_delta(poset(p), poset(q), opt));
      },
      py::arg("p"), py::arg("q"), py::arg("t_max") = py::none(), py::arg("d_cap") = 6);

  m.def(
      "reproduce",
      [](int trials, std::uint64_t seed) {
        twinned::ReproduceOptions opt;
        opt.trials = trials;
        opt.seed = seed;
        return result(twinned::cmd_reproduce(opt));
      },
      py::arg("trials") = 25, py::arg("seed") = 1);

  m.def(
      "fuzz",
      [](int trials, std::uint64_t seed, int d_min, int d_max) {
        twinned::FuzzOptions opt;
        opt.trials = trials;
        opt.seed = seed;
        opt.d_min = d_min;
        opt.d_max = d_max;
        return result(twinned::cmd_fuzz(opt));
      },
      py::arg("trials") = 100, py::arg("seed") = 7, py::arg("d_min") = 2, py::arg("d_max") = 4);

  m.def(
      "common_linear_extension",
      [](const std::string& p, const std::string& q) -> std::optional<std::vector<int>> {
        auto ext = twinned::common_linear_extension(poset(p), poset(q));
        if (!ext) return std::nullopt;
        for (auto& x : *ext) ++x;
        return ext;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "ideals",
      [](const std::string& p) {
        std::vector<std::vector<int>> out;
        for (twinned::Mask ideal : twinned::enumerate_ideals(poset(p)).ideals) {
          std::vector<int> labels;
          for (int i = 0; i < twinned::kMaxPosetSize; ++i)
            if ((ideal >> i) & 1u) labels.push_back(i + 1);
          out.push_back(std::move(labels));
        }
        return out;
      },
      py::arg("p"));

  m.def("canonical", [](const std::string& p) { return twinned::serialize_poset(poset(p)); }, py::arg("p"));
}
