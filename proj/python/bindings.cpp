#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "synrough/colormap.hpp"
#include "synrough/diagnostics.hpp"
#include "synrough/error.hpp"
#include "synrough/field.hpp"
#include "synrough/io.hpp"
#include "synrough/rogallo.hpp"
#include "synrough/spectral.hpp"

namespace py = pybind11;
using namespace synrough;

namespace
{

// Fields cross the boundary as (ny, nx) float64 arrays, row index = y.
py::array_t<double> to_numpy(const ScalarField& f)
{
    py::array_t<double> out({f.ny(), f.nx()});
    std::copy(f.values().begin(), f.values().end(), out.mutable_data());
    return out;
}

ScalarField from_numpy(py::array_t<double, py::array::c_style | py::array::forcecast> a,
                       double length_x, double length_y, bool periodic)
{
    if (a.ndim() != 2)
        throw UsageError("expected a 2-D array");
    const auto ny = static_cast<std::size_t>(a.shape(0));
    const auto nx = static_cast<std::size_t>(a.shape(1));
    return {nx, ny, length_x, length_y, periodic ? SamplingMode::periodic : SamplingMode::endpoint,
            std::vector<double>(a.data(), a.data() + nx * ny)};
}

py::array_t<std::complex<double>> coeffs_to_numpy(const SpectralField& s)
{
    py::array_t<std::complex<double>> out({s.ny(), s.nx()});
    std::copy(s.coeffs().begin(), s.coeffs().end(), out.mutable_data());
    return out;
}

} // namespace

PYBIND11_MODULE(_synrough, m)
{
    m.doc() = "Synthetic surface roughness from a single colormapped scan";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("rgb_to_hue", &rgb_to_hue, py::arg("r"), py::arg("g"), py::arg("b"));
    m.def("normalize_hue", &normalize_hue, py::arg("hue"));
    m.def(
        "rescale_to_amplitude",
        [](double h, double lo, double hi) { return rescale_to_amplitude(h, {lo, hi}); },
        py::arg("normalized_hue"), py::arg("f_min"), py::arg("f_max"));

    m.def(
        "extract_field",
        [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> rgb, double lo,
           double hi) {
            if (rgb.ndim() != 3 || rgb.shape(2) != 3)
                throw UsageError("expected an (height, width, 3) uint8 array");
            const auto h = static_cast<std::size_t>(rgb.shape(0));
            const auto w = static_cast<std::size_t>(rgb.shape(1));
            std::vector<Rgb> px(w * h);
            const std::uint8_t* d = rgb.data();
            for (std::size_t k = 0; k < w * h; ++k)
                px[k] = {d[3 * k], d[3 * k + 1], d[3 * k + 2]};
            return to_numpy(extract_field(RgbImage(w, h, std::move(px)), {lo, hi}).values);
        },
        py::arg("rgb"), py::arg("f_min"), py::arg("f_max"),
        "Decode an (height, width, 3) HSV-colormapped image into heights over [f_min, f_max].");

    m.def(
        "render_hsv",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> values, double lo, double hi) {
            const RgbImage img = render_hsv(from_numpy(values, two_pi, two_pi, false), {lo, hi});
            py::array_t<std::uint8_t> out({img.height(), img.width(), std::size_t{3}});
            std::uint8_t* d = out.mutable_data();
            for (std::size_t k = 0; k < img.pixel_count(); ++k)
            {
                d[3 * k] = img.pixels()[k].r;
                d[3 * k + 1] = img.pixels()[k].g;
                d[3 * k + 2] = img.pixels()[k].b;
            }
            return out;
        },
        py::arg("values"), py::arg("f_min"), py::arg("f_max"));

    m.def(
        "load_image",
        [](const std::filesystem::path& path) {
            const RgbImage img = io::load_image(path);
            py::array_t<std::uint8_t> out({img.height(), img.width(), std::size_t{3}});
            std::uint8_t* d = out.mutable_data();
            for (std::size_t k = 0; k < img.pixel_count(); ++k)
            {
                d[3 * k] = img.pixels()[k].r;
                d[3 * k + 1] = img.pixels()[k].g;
                d[3 * k + 2] = img.pixels()[k].b;
            }
            return out;
        },
        py::arg("path"));

    m.def(
        "resample",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> values, std::size_t nx,
           std::size_t ny, bool periodic, double length_x, double length_y) {
            const ScalarField f = from_numpy(values, length_x, length_y, false);
            return to_numpy(resample(
                f, {nx, ny, periodic ? SamplingMode::periodic : SamplingMode::endpoint}));
        },
        py::arg("values"), py::arg("nx"), py::arg("ny"), py::arg("periodic") = true,
        py::arg("length_x") = two_pi, py::arg("length_y") = two_pi);

    py::class_<SpectralField>(m, "SpectralField")
        .def_property_readonly("nx", &SpectralField::nx)
        .def_property_readonly("ny", &SpectralField::ny)
        .def_property_readonly("scale_s", &SpectralField::scale_s)
        .def_property_readonly("scale_r", &SpectralField::scale_r)
        .def("coeff", py::overload_cast<int, int>(&SpectralField::at, py::const_), py::arg("n"),
             py::arg("m"))
        .def("coeffs", &coeffs_to_numpy,
             "(ny, nx) complex array; row m - m_min, column n - n_min")
        .def("is_hermitian", &SpectralField::is_hermitian, py::arg("tol") = 1e-12);

    m.def(
        "dft2",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> samples, bool periodic) {
            return dft2(from_numpy(samples, two_pi, two_pi, periodic));
        },
        py::arg("samples"), py::arg("periodic") = true);
    m.def(
        "idft2",
        [](const SpectralField& s, std::size_t nx, std::size_t ny) { return to_numpy(idft2(s, {nx, ny})); },
        py::arg("spectrum"), py::arg("nx"), py::arg("ny"));
    m.def("scale_wavenumbers", &scale_wavenumbers, py::arg("spectrum"), py::arg("length_x"),
          py::arg("length_y"));
    m.def(
        "energy_spectrum", [](const SpectralField& s) { return energy_spectrum(s).bins; },
        py::arg("spectrum"));

    py::class_<RogalloField>(m, "RogalloField")
        .def_readonly("comp_n", &RogalloField::comp_n)
        .def_readonly("comp_m", &RogalloField::comp_m)
        .def_readonly("seed", &RogalloField::seed)
        .def("combined_spectrum", [](const RogalloField& f) { return combined_spectrum(f).bins; })
        .def("vorticity", &vorticity_field)
        .def(
            "magnitude",
            [](const RogalloField& f, std::size_t nx, std::size_t ny) {
                return to_numpy(magnitude_field(f, {nx, ny}));
            },
            py::arg("nx"), py::arg("ny"));

    m.def(
        "synthesize",
        [](std::vector<double> spectrum, std::size_t nx, std::size_t ny, std::uint64_t seed) {
            return synthesize_vector(EnergySpectrum{std::move(spectrum)}, nx, ny, seed);
        },
        py::arg("spectrum"), py::arg("nx"), py::arg("ny"), py::arg("seed"));
    m.def(
        "top_hat_filter",
        [](const SpectralField& s, int cutoff) { return top_hat_filter(s, {cutoff}); },
        py::arg("spectrum"), py::arg("cutoff") = 32);
    m.def(
        "enstrophy",
        [](const SpectralField& v, std::size_t nx, std::size_t ny) {
            return to_numpy(enstrophy_field(v, {nx, ny}));
        },
        py::arg("vorticity"), py::arg("nx"), py::arg("ny"));

    auto curve = [](bool along_x) {
        return [along_x](py::array_t<double, py::array::c_style | py::array::forcecast> values,
                         double length_x, double length_y) {
            const ScalarField f = from_numpy(values, length_x, length_y, false);
            const CorrelationCurve c = along_x ? correlation_x(f) : correlation_y(f);
            return py::make_tuple(c.separations, c.values);
        };
    };
    m.def("correlation_x", curve(true), py::arg("values"), py::arg("length_x") = two_pi,
          py::arg("length_y") = two_pi, "(separations, values) of the circular x autocorrelation");
    m.def("correlation_y", curve(false), py::arg("values"), py::arg("length_x") = two_pi,
          py::arg("length_y") = two_pi);

    m.def(
        "extraction_error",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> values,
           const std::function<double(double, double)>& reference) {
            return extraction_error(from_numpy(values, two_pi, two_pi, false), reference);
        },
        py::arg("values"), py::arg("reference"));
}
