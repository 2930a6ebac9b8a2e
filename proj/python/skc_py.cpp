#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skc/error.hpp"
#include "skc/explorer.hpp"
#include "skc/json_io.hpp"
#include "skc/pretty.hpp"
#include "skc/runtime.hpp"

namespace py = pybind11;

// Structured results cross the boundary as JSON text; skc/__init__.py decodes them.
PYBIND11_MODULE(_skc, m) {
  m.doc() = "Serverless Kernel Calculus engine";

  static py::exception<skc::Error> error(m, "SkcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const skc::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("parse_json", [](const std::string& src) { return skc::to_json(skc::parse_program(src)).dump(); });
  m.def("pretty_program", [](const std::string& src) { return skc::pretty(skc::parse_program(src)); });
  m.def("pretty_term", [](const std::string& src) { return skc::pretty(skc::parse_term(src)); });
  m.def("alpha_eq", [](const std::string& a, const std::string& b) {
    return skc::alpha_eq(skc::parse_term(a), skc::parse_term(b));
  });
  m.def("congruent", [](const std::string& a, const std::string& b) {
    return skc::congruent(skc::parse_system(a), skc::parse_system(b));
  });
  m.def("canonical_key", [](const std::string& system) {
    return skc::canonical_key(skc::Config::make(skc::parse_system(system), {})).text;
  });
  m.def(
      "run_json",
      [](const std::string& src, const std::string& strategy, std::uint64_t seed, std::size_t max_steps, bool trace) {
        auto cfg = skc::boot(skc::parse_program(src));
        auto s = strategy == "random" ? skc::Strategy::random(seed) : skc::Strategy::deterministic();
        py::gil_scoped_release release;
        auto doc = skc::to_json(skc::run(cfg, s, max_steps, {.record_config_text = trace}));
        if (!trace) doc.erase("trace");
        return doc.dump();
      },
      py::arg("src"), py::arg("strategy") = "det", py::arg("seed") = 0, py::arg("max_steps") = skc::kDefaultMaxSteps,
      py::arg("trace") = false);
  m.def(
      "explore_json",
      [](const std::string& src, std::size_t max_states, std::size_t max_depth) {
        auto cfg = skc::boot(skc::parse_program(src));
        py::gil_scoped_release release;
        auto g = skc::explore(cfg, max_states, max_depth);
        return skc::summary_json(g, skc::final_outcomes(g)).dump();
      },
      py::arg("src"), py::arg("max_states") = skc::kDefaultMaxStates, py::arg("max_depth") = skc::kDefaultMaxDepth);
}
