#include "kummerlog/parse.hpp"
#include "kummerlog/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>

namespace py = pybind11;
namespace rp = kummerlog::report;
using rp::Json;

namespace {

// Every entry point returns a JSON string; failures come back as the same
// error document the CLI prints, and the Python side raises from it.
std::string guarded(std::string const& name, Json const& echo, std::function<Json()> const& fn)
{
    try {
        return fn().dump();
    } catch (kummerlog::Error const& e) {
        return rp::error_document(name, echo, e).dump();
    } catch (std::exception const& e) {
        kummerlog::Error wrapped(kummerlog::ErrorCode::internal_consistency, "internal", e.what());
        return rp::error_document(name, echo, wrapped).dump();
    }
}

Json opt(std::optional<std::string> const& s) { return s ? Json(*s) : Json(); }

std::string canonical(std::string const& what, std::string const& ring, std::string const& text)
{
    Json echo{{"what", what}, {"ring", ring}, {"text", text}};
    return guarded("parse", echo, [&] {
        auto R = kummerlog::parse_ring(ring);
        std::string out;
        if (what == "ring")
            out = kummerlog::parse_ring(text).to_string();
        else if (what == "element")
            out = kummerlog::parse_element(R, text).to_string();
        else if (what == "prime")
            out = kummerlog::parse_prime(R, text).to_string();
        else if (what == "divisor")
            out = kummerlog::parse_divisor(R, text).to_string();
        else if (what == "curve")
            out = kummerlog::parse_curve(R, text).to_string();
        else if (what == "point")
            out = kummerlog::parse_point(R, text).to_string();
        else
            throw kummerlog::unsupported("unknown_literal", "no literal kind '" + what + "'");
        return Json{{"schema_version", rp::kSchemaVersion}, {"value", out}};
    });
}

} // namespace

PYBIND11_MODULE(_kummerlog, m)
{
    m.doc() = "JSON-string entry points; use the kummerlog package instead";
    m.attr("SCHEMA_VERSION") = rp::kSchemaVersion;

    m.def("logpic", [](std::string const& ring, std::string const& D, std::optional<std::string> const& div) {
        rp::LogpicArgs a{ring, D, div};
        return guarded("logpic", {{"ring", ring}, {"D", D}, {"div", opt(div)}}, [&] { return rp::logpic(a); });
    }, py::arg("ring") = "Z", py::arg("D") = "", py::arg("div") = py::none());

    m.def("mun", [](std::string const& ring, std::string const& D, long n) {
        rp::MunArgs a{ring, D, n};
        return guarded("mun", {{"ring", ring}, {"D", D}, {"n", n}}, [&] { return rp::mun(a); });
    }, py::arg("ring") = "Z", py::arg("D") = "", py::arg("n") = 2);

    m.def("curve", [](std::string const& E, std::string const& ring, std::optional<std::string> const& p) {
        rp::CurveArgs a{E, ring, p};
        return guarded("curve", {{"E", E}, {"ring", ring}, {"p", opt(p)}}, [&] { return rp::curve(a); });
    }, py::arg("E"), py::arg("ring") = "Z", py::arg("p") = py::none());

    m.def("pair",
          [](std::string const& E, std::string const& x, std::string const& y, std::string const& ring,
             std::optional<std::string> const& D, std::vector<std::string> const& T,
             std::optional<std::string> const& scale) {
              rp::PairArgs a{E, x, y, ring, D, T, scale};
              Json echo{{"E", E}, {"x", x}, {"y", y}, {"ring", ring}, {"D", opt(D)}, {"T", T}, {"scale", opt(scale)}};
              return guarded("pair", echo, [&] { return rp::pair(a); });
          },
          py::arg("E"), py::arg("x"), py::arg("y"), py::arg("ring") = "Z", py::arg("D") = py::none(),
          py::arg("T") = std::vector<std::string>{}, py::arg("scale") = py::none());

    m.def("canonical", &canonical, py::arg("what"), py::arg("ring"), py::arg("text"));

    m.def("render_pretty", [](std::string const& doc) { return rp::render_pretty(Json::parse(doc)); });
}
