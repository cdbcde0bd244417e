#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "storagecode/code.hpp"
#include "storagecode/families.hpp"
#include "storagecode/ideals.hpp"

namespace py = pybind11;
using namespace storagecode;

namespace {

ConnectionSet set_from_text(const std::string& poly) {
    return connection_set_from_element(parse_polynomial(poly));
}

py::dict instance_dict(const FamilyInstance& inst) {
    py::dict d;
    d["family"] = family_tag(inst.family);
    d["r"] = inst.r;
    d["k"] = inst.k;
    d["arity"] = inst.arity;
    d["polynomial"] = format_polynomial(inst.element);
    d["rate_lower"] = inst.rate_lower.str();
    d["rate_upper"] = inst.rate_upper.str();
    return d;
}

py::dict report_dict(const CodeReport& rep) {
    py::dict d;
    d["arity"] = rep.arity;
    d["code_length"] = rep.code_length;
    d["code_dim"] = rep.code_dim;
    d["rate"] = rep.rate.str();
    d["rate_float"] = rep.rate.to_double();
    d["triangle_free"] = rep.triangle_free;
    d["degree"] = rep.degree;
    d["edge_count"] = rep.edge_count;
    if (rep.ceiling_from_necessary_conditions)
        d["ceiling_from_necessary_conditions"] = rep.ceiling_from_necessary_conditions->str();
    else
        d["ceiling_from_necessary_conditions"] = py::none();
    d["edgeless"] = rep.edgeless;
    return d;
}

} // namespace

PYBIND11_MODULE(_storagecode, m) {
    m.doc() = "triangle-free Cayley-graph storage codes over F_2^n";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            switch (e.kind()) {
                case errc::io:
                    PyErr_SetString(PyExc_OSError, e.what());
                    break;
                case errc::resource:
                    PyErr_SetString(PyExc_MemoryError, e.what());
                    break;
                default:
                    PyErr_SetString(PyExc_ValueError, e.what());
            }
        }
    });

    m.def("canonical_polynomial",
          [](const std::string& text) { return format_polynomial(parse_polynomial(text)); },
          py::arg("text"), "parse and reprint a polynomial in canonical form");

    m.def("family",
          [](const std::string& name, int r, int k) {
              if (name == "hamming") return instance_dict(hamming_element(r));
              if (name == "seven_eighths") return instance_dict(seven_eighths_element(k));
              if (name == "generalized") return instance_dict(generalized_element(r, k));
              fail(errc::bad_parameter, "unknown family " + name);
          },
          py::arg("name"), py::arg("r") = -1, py::arg("k") = -1,
          "construct hamming/seven_eighths/generalized family element");

    m.def("rate_report",
          [](const std::string& poly, int max_k) { return report_dict(code_rate(set_from_text(poly), max_k)); },
          py::arg("polynomial"), py::arg("max_k") = 3, "exact rate report for a polynomial");

    m.def("is_triangle_free",
          [](const std::string& poly) { return is_triangle_free(set_from_text(poly)); },
          py::arg("polynomial"));

    m.def("ideal_dim",
          [](const std::string& poly) {
              return ideal_dim(principal_ideal(parse_polynomial(poly)));
          },
          py::arg("polynomial"), "dimension of the principal ideal of the polynomial");

    m.def("annihilator_dim",
          [](const std::string& poly) { return annihilator_dim(parse_polynomial(poly)); },
          py::arg("polynomial"));

    m.def("sparsity_check",
          [](int r, int k) {
              SparsityCheck sc = sparsity_check(r, k);
              py::dict d;
              d["vertices"] = sc.vertices;
              d["predicted_degree"] = sc.predicted_degree;
              d["actual_degree"] = sc.actual_degree;
              d["exponent_estimate"] = sc.exponent_estimate;
              return d;
          },
          py::arg("r"), py::arg("k"));

    m.def("verify_section3",
          [](int n, std::uint64_t seed, int partitions) {
              Section3Report rep = verify_section3(n, seed, partitions);
              py::dict d;
              d["n"] = rep.n;
              d["seed"] = rep.seed;
              d["partitions"] = rep.partition_count;
              d["pass"] = rep.pass;
              py::list items;
              for (const auto& it : rep.items) {
                  py::dict ji;
                  ji["name"] = it.name;
                  ji["checks"] = it.checks;
                  ji["pass"] = it.pass;
                  ji["dims"] = it.dims;
                  ji["counterexamples"] = it.counterexamples;
                  items.append(std::move(ji));
              }
              d["items"] = std::move(items);
              return d;
          },
          py::arg("n"), py::arg("seed") = kSection3Seed, py::arg("partitions") = 50,
          "run the ideal/annihilator identity suite");
}
