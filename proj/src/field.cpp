#include "synrough/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "synrough/error.hpp"

namespace synrough
{

void AmplitudeRange::validate() const
{
    if (!std::isfinite(min) || !std::isfinite(max) || !(max > min))
        throw UsageError("invalid amplitude range: need f_max > f_min, got (" + std::to_string(min) +
                         ", " + std::to_string(max) + ")");
}

ScalarField::ScalarField(std::size_t nx, std::size_t ny, double length_x, double length_y,
                         SamplingMode mode)
    : ScalarField(nx, ny, length_x, length_y, mode, std::vector<double>(nx * ny, 0.0))
{
}

ScalarField::ScalarField(std::size_t nx, std::size_t ny, double length_x, double length_y,
                         SamplingMode mode, std::vector<double> values)
    : nx_(nx), ny_(ny), length_x_(length_x), length_y_(length_y), mode_(mode),
      values_(std::move(values))
{
    if (nx == 0 || ny == 0)
        throw UsageError("field dimensions must be positive");
    if (!(length_x > 0.0) || !(length_y > 0.0))
        throw UsageError("domain lengths must be positive");
    if (values_.size() != nx * ny)
        throw UsageError("field value count " + std::to_string(values_.size()) +
                         " does not match " + std::to_string(nx) + "x" + std::to_string(ny));
}

double sample_spacing(double length, std::size_t count, SamplingMode mode)
{
    if (mode == SamplingMode::periodic)
        return length / static_cast<double>(count);
    // a single endpoint sample sits at the origin
    return count > 1 ? length / static_cast<double>(count - 1) : 0.0;
}

double ScalarField::dx() const { return sample_spacing(length_x_, nx_, mode_); }
double ScalarField::dy() const { return sample_spacing(length_y_, ny_, mode_); }

double ScalarField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField::max() const { return *std::max_element(values_.begin(), values_.end()); }

double ScalarField::mean() const
{
    return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(size());
}

ScalarField ScalarField::transposed() const
{
    ScalarField out(ny_, nx_, length_y_, length_x_, mode_);
    for (std::size_t j = 0; j < ny_; ++j)
        for (std::size_t i = 0; i < nx_; ++i)
            out(j, i) = (*this)(i, j);
    return out;
}

void SampleSpec::validate() const
{
    if (nx < 4 || ny < 4)
        throw UsageError("sample counts must be at least 4");
    if (nx % 2 != 0 || ny % 2 != 0)
        throw UsageError("sample counts must be even, got " + std::to_string(nx) + "x" +
                         std::to_string(ny));
}

namespace
{

std::array<double, 4> catmull_rom_weights(double t)
{
    const double t2 = t * t;
    const double t3 = t2 * t;
    return {0.5 * (-t3 + 2.0 * t2 - t), 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0),
            0.5 * (-3.0 * t3 + 4.0 * t2 + t), 0.5 * (t3 - t2)};
}

// Locates the cell containing fractional index u and its local offset.
struct Cell
{
    std::ptrdiff_t base;
    double t;
};

Cell locate(double u, std::size_t count, SamplingMode mode)
{
    // snap coordinates that are grid nodes up to rounding so nodes reproduce exactly
    const double nearest = std::round(u);
    if (std::abs(u - nearest) < 1e-9)
        u = nearest;

    const auto last_cell = static_cast<std::ptrdiff_t>(mode == SamplingMode::periodic ? count - 1
                                                                                      : count - 2);
    auto base = static_cast<std::ptrdiff_t>(std::floor(u));
    base = std::clamp<std::ptrdiff_t>(base, 0, last_cell);
    return {base, u - static_cast<double>(base)};
}

// One row of four stencil values around `base` along a line of `count` nodes.
template <typename Fetch>
std::array<double, 4> stencil(Fetch fetch, std::ptrdiff_t base, std::size_t count, SamplingMode mode)
{
    const auto n = static_cast<std::ptrdiff_t>(count);
    std::array<double, 4> s{};
    if (mode == SamplingMode::periodic)
    {
        for (std::ptrdiff_t k = 0; k < 4; ++k)
            s[k] = fetch(((base - 1 + k) % n + n) % n);
        return s;
    }
    for (std::ptrdiff_t k = 0; k < 4; ++k)
    {
        const std::ptrdiff_t idx = base - 1 + k;
        if (idx < 0)
            s[k] = 3.0 * fetch(0) - 3.0 * fetch(1) + fetch(2);
        else if (idx >= n)
            s[k] = 3.0 * fetch(n - 1) - 3.0 * fetch(n - 2) + fetch(n - 3);
        else
            s[k] = fetch(idx);
    }
    return s;
}

} // namespace

double interpolate(const ScalarField& field, double x, double y)
{
    if (field.nx() < 4 || field.ny() < 4)
        throw UsageError("bicubic interpolation needs at least a 4x4 grid");
    const double tol_x = 1e-12 * field.length_x();
    const double tol_y = 1e-12 * field.length_y();
    if (!(x >= -tol_x && x <= field.length_x() + tol_x && y >= -tol_y &&
          y <= field.length_y() + tol_y))
        throw UsageError("interpolation point (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") outside the domain");

    const Cell cx = locate(std::max(x, 0.0) / field.dx(), field.nx(), field.mode());
    const Cell cy = locate(std::max(y, 0.0) / field.dy(), field.ny(), field.mode());
    const auto wx = catmull_rom_weights(cx.t);
    const auto wy = catmull_rom_weights(cy.t);

    auto row_value = [&](std::ptrdiff_t j) {
        const auto s = stencil([&](std::ptrdiff_t i) { return field(static_cast<std::size_t>(i),
                                                                    static_cast<std::size_t>(j)); },
                               cx.base, field.nx(), field.mode());
        return wx[0] * s[0] + wx[1] * s[1] + wx[2] * s[2] + wx[3] * s[3];
    };
    const auto col = stencil(row_value, cy.base, field.ny(), field.mode());
    return wy[0] * col[0] + wy[1] * col[1] + wy[2] * col[2] + wy[3] * col[3];
}

ScalarField resample(const ScalarField& field, const SampleSpec& spec)
{
    spec.validate();
    ScalarField out(spec.nx, spec.ny, field.length_x(), field.length_y(), spec.mode);
    for (std::size_t j = 0; j < spec.ny; ++j)
        for (std::size_t i = 0; i < spec.nx; ++i)
            out(i, j) = interpolate(field, out.x(i), out.y(j));
    return out;
}

ScalarField rescale_amplitude(const ScalarField& field, const AmplitudeRange& range)
{
    range.validate();
    const double lo = field.min();
    const double hi = field.max();
    if (!(hi > lo))
        throw InputError("cannot rescale a constant field");
    std::vector<double> values(field.size());
    const auto src = field.values();
    std::transform(src.begin(), src.end(), values.begin(), [&](double v) {
        return std::lerp(range.min, range.max, (v - lo) / (hi - lo));
    });
    return {field.nx(), field.ny(), field.length_x(), field.length_y(), field.mode(),
            std::move(values)};
}

} // namespace synrough
