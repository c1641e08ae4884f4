#ifndef SYNROUGH_TEST_SUPPORT_HPP
#define SYNROUGH_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "synrough/colormap.hpp"
#include "synrough/field.hpp"
#include "synrough/spectral.hpp"

namespace synrough::testing
{

/// The analytic verification surface sin(x) + cos(2y) on [0, 2 pi]^2, range (-2, 2).
inline double test_surface(double x, double y) { return std::sin(x) + std::cos(2.0 * y); }
inline constexpr AmplitudeRange test_range{-2.0, 2.0};

template <typename F>
ScalarField sample_function(std::size_t nx, std::size_t ny, F f,
                            SamplingMode mode = SamplingMode::endpoint, double lx = two_pi,
                            double ly = two_pi)
{
    ScalarField out(nx, ny, lx, ly, mode);
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            out(i, j) = f(out.x(i), out.y(j));
    return out;
}

/// HSV render of the test surface, pixel (i, j) showing the surface at node (x_i, y_j).
inline RgbImage render_test_surface(std::size_t width, std::size_t height)
{
    return render_hsv(sample_function(width, height, test_surface), test_range);
}

inline ScalarField random_field(std::size_t nx, std::size_t ny, std::uint64_t seed,
                                SamplingMode mode = SamplingMode::periodic)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    ScalarField out(nx, ny, two_pi, two_pi, mode);
    for (double& v : out.values())
        v = normal(rng);
    return out;
}

/// |k| e^{-|k|/8} on bins 0..count-1.
inline EnergySpectrum decaying_spectrum(std::size_t count)
{
    EnergySpectrum s{std::vector<double>(count)};
    for (std::size_t k = 0; k < count; ++k)
        s.bins[k] = static_cast<double>(k) * std::exp(-static_cast<double>(k) / 8.0);
    return s;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("synrough_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace synrough::testing

#endif // SYNROUGH_TEST_SUPPORT_HPP
