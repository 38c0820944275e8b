#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cobord/json_io.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const cobord::Json& j) {
    switch (j.type()) {
        case nlohmann::detail::value_t::null: return py::none();
        case nlohmann::detail::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::detail::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::detail::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::detail::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::detail::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::detail::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case nlohmann::detail::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
            return out;
        }
        default: throw std::runtime_error("unsupported JSON value");
    }
}

cobord::CharClassPoly class_from(const std::string& name, const std::vector<std::string>& params) {
    return cobord::resolve_class_argument(name, params);
}

}  // namespace

PYBIND11_MODULE(_cobord, m) {
    m.doc() = "Exact hypersurface index bounds and algebraic-cobordism lattices";

    m.def("index_bound",
          [](long d, long N) { return to_py(cobord::op_index_bound(d, N)["value"]); },
          py::arg("d"), py::arg("N"),
          "I_{d,N}: gcd of d/delta over divisors delta <= N of d");
    m.def("chi_hypersurface",
          [](long d, long n) { return to_py(cobord::op_chi(d, n)["value"]); },
          py::arg("d"), py::arg("n"));
    m.def("gcd_lemma",
          [](long d, long N) { return to_py(cobord::op_gcd_lemma(d, N)); },
          py::arg("d"), py::arg("N"));
    m.def("threshold",
          [](long d) { return to_py(cobord::op_threshold(d)["value"]); }, py::arg("d"),
          "Smallest N with I_{d,N} = 1");
    m.def("fermat_certificate",
          [](long d, long N, long e) { return to_py(cobord::op_fermat(d, N, e)); },
          py::arg("d"), py::arg("N"), py::arg("e"));
    m.def("fundamental_polynomial",
          [](const std::string& variety) { return to_py(cobord::op_fund_poly(variety)); },
          py::arg("variety"));
    m.def("lattice", [](int d) { return to_py(cobord::op_lattice(d)); }, py::arg("d"));
    m.def("dual_lattice", [](int d) { return to_py(cobord::op_dual_lattice(d)); }, py::arg("d"));
    m.def("hattori_stong",
          [](int d, int max_b) { return to_py(cobord::op_hattori_stong(d, max_b)); },
          py::arg("d"), py::arg("max_b") = 6);
    m.def("check_class",
          [](const std::string& name, const std::vector<std::string>& params) {
              return to_py(cobord::op_check_class(class_from(name, params)));
          },
          py::arg("name"), py::arg("params") = std::vector<std::string>{});
    m.def("pair",
          [](const std::string& name, const std::vector<std::string>& params,
             const std::string& variety) {
              return to_py(cobord::op_pair(class_from(name, params), variety));
          },
          py::arg("name"), py::arg("params"), py::arg("variety"));
    m.def("chi_bundle",
          [](const std::string& variety, const std::string& bundle) {
              return to_py(cobord::op_chi_bundle(variety, bundle)["value"]);
          },
          py::arg("variety"), py::arg("bundle"));
    m.def("signature",
          [](const std::string& variety) { return to_py(cobord::op_signature(variety)["value"]); },
          py::arg("variety"));
    m.def("half_euler",
          [](const std::string& variety) { return to_py(cobord::op_half_euler(variety)); },
          py::arg("variety"));
}
