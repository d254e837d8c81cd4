// pybind11 surface for the integer pipeline, the exact reference, and the
// pipeline simulator.  Exact rationals cross the boundary as
// fractions.Fraction so Python callers keep exactness.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mmbebhe/core.hpp"
#include "mmbebhe/equalize.hpp"
#include "mmbebhe/hwsim.hpp"
#include "mmbebhe/imgio.hpp"
#include "mmbebhe/oracle.hpp"
#include "mmbebhe/rational.hpp"
#include "mmbebhe/smbe.hpp"

namespace py = pybind11;

namespace {

py::object to_fraction(const mmbebhe::Rational& r) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(py::int_(r.num()), py::int_(r.den()));
}

mmbebhe::GrayImage image_from_bytes(int width, int height, const py::bytes& data) {
    const std::string_view view = data;
    std::vector<std::uint8_t> pixels(view.begin(), view.end());
    return mmbebhe::GrayImage(width, height, std::move(pixels));
}

py::bytes image_to_bytes(const mmbebhe::GrayImage& image) {
    const auto view = image.pixels();
    return py::bytes(reinterpret_cast<const char*>(view.data()), view.size());
}

}  // namespace

PYBIND11_MODULE(_mmbebhe, m) {
    m.doc() = "Integer-only brightness-preserving bi-histogram equalization";

    py::register_exception<mmbebhe::Error>(m, "Error", PyExc_RuntimeError);

    py::class_<mmbebhe::GrayImage>(m, "GrayImage")
        .def(py::init(&image_from_bytes), py::arg("width"), py::arg("height"), py::arg("pixels"))
        .def_property_readonly("width", &mmbebhe::GrayImage::width)
        .def_property_readonly("height", &mmbebhe::GrayImage::height)
        .def_property_readonly("pixels", &image_to_bytes)
        .def("pixel_count", &mmbebhe::GrayImage::pixel_count)
        .def(py::self == py::self)
        .def("__repr__", [](const mmbebhe::GrayImage& img) {
            return "GrayImage(" + std::to_string(img.width()) + "x" +
                   std::to_string(img.height()) + ")";
        });

    py::class_<mmbebhe::Histogram>(m, "Histogram")
        .def(py::init([](const std::vector<std::uint32_t>& freq) {
                 if (freq.size() != mmbebhe::kGrayLevels) {
                     throw py::value_error("histogram needs exactly 256 frequencies");
                 }
                 std::array<std::uint32_t, mmbebhe::kGrayLevels> array{};
                 std::copy(freq.begin(), freq.end(), array.begin());
                 return mmbebhe::Histogram(array);
             }),
             py::arg("frequencies"))
        .def("freq", &mmbebhe::Histogram::freq, py::arg("gray"))
        .def_property_readonly("frequencies",
                               [](const mmbebhe::Histogram& h) {
                                   const auto& f = h.frequencies();
                                   return std::vector<std::uint32_t>(f.begin(), f.end());
                               })
        .def_property_readonly("total", &mmbebhe::Histogram::total)
        .def_property_readonly("pixel_sum", &mmbebhe::Histogram::pixel_sum);

    py::class_<mmbebhe::SmbeTable>(m, "SmbeTable")
        .def_property_readonly("entries", [](const mmbebhe::SmbeTable& t) {
            return std::vector<std::int32_t>(t.entries.begin(), t.entries.end());
        });

    py::class_<mmbebhe::Threshold>(m, "Threshold")
        .def_readonly("value", &mmbebhe::Threshold::value)
        .def_readonly("smbe", &mmbebhe::Threshold::smbe)
        .def("__repr__", [](const mmbebhe::Threshold& t) {
            return "Threshold(value=" + std::to_string(int(t.value)) +
                   ", smbe=" + std::to_string(t.smbe) + ")";
        });

    py::class_<mmbebhe::PixelMap>(m, "PixelMap")
        .def_property_readonly("map",
                               [](const mmbebhe::PixelMap& p) {
                                   return std::vector<int>(p.map.begin(), p.map.end());
                               })
        .def_readonly("threshold", &mmbebhe::PixelMap::threshold);

    py::class_<mmbebhe::StageReport>(m, "StageReport")
        .def_property_readonly("stage",
                               [](const mmbebhe::StageReport& r) {
                                   return std::string(mmbebhe::stage_name(r.stage));
                               })
        .def_readonly("iterations", &mmbebhe::StageReport::iterations)
        .def_readonly("cycles", &mmbebhe::StageReport::cycles)
        .def_readonly("micros", &mmbebhe::StageReport::micros);

    py::class_<mmbebhe::SimulationResult>(m, "SimulationResult")
        .def_readonly("stages", &mmbebhe::SimulationResult::stages)
        .def_readonly("map", &mmbebhe::SimulationResult::map);

    py::class_<mmbebhe::VerifyResult>(m, "VerifyResult")
        .def_readonly("ok", &mmbebhe::VerifyResult::ok)
        .def_readonly("first_bad_gray", &mmbebhe::VerifyResult::first_bad_gray)
        .def_readonly("detail", &mmbebhe::VerifyResult::detail);

    m.def("generate_hist", &mmbebhe::generate_hist, py::arg("image"));
    m.def("calculate_smbe", &mmbebhe::calculate_smbe, py::arg("hist"));
    m.def("smbe_closed_form", &mmbebhe::smbe_closed_form, py::arg("hist"), py::arg("gamma"));
    m.def("find_threshold", &mmbebhe::find_threshold, py::arg("table"));
    m.def("mmbebhe", &mmbebhe::mmbebhe, py::arg("image"));
    m.def("he_map", &mmbebhe::he_map, py::arg("image"));
    m.def("apply_map", &mmbebhe::apply_map, py::arg("image"), py::arg("map"));
    m.def("brute_force_threshold", &mmbebhe::brute_force_threshold, py::arg("hist"));
    m.def(
        "ambe",
        [](const mmbebhe::GrayImage& a, const mmbebhe::GrayImage& b) {
            return to_fraction(mmbebhe::ambe(a, b));
        },
        py::arg("original"), py::arg("enhanced"));
    m.def("verify", &mmbebhe::verify_integer_vs_reference, py::arg("image"));
    m.def(
        "simulate",
        [](const mmbebhe::GrayImage& image, double clock_mhz) {
            mmbebhe::CycleModel model;
            model.clock_mhz = clock_mhz;
            return mmbebhe::simulate(image, model);
        },
        py::arg("image"), py::arg("clock_mhz") = 300.0);
    m.def(
        "read_pgm",
        [](const py::bytes& data) {
            const std::string_view view = data;
            std::vector<std::uint8_t> bytes(view.begin(), view.end());
            return mmbebhe::read_pgm(bytes);
        },
        py::arg("data"));
    m.def(
        "write_pgm",
        [](const mmbebhe::GrayImage& image) {
            const auto bytes = mmbebhe::write_pgm(image);
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("image"));
    m.def("write_map_file", &mmbebhe::write_map_file, py::arg("map"));
    m.def("read_map_file", &mmbebhe::read_map_file, py::arg("text"));
}
