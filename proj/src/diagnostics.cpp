#include "synrough/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "synrough/error.hpp"

namespace synrough
{

double extraction_error(const ScalarField& extracted, const SurfaceFunction& reference)
{
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t j = 0; j < extracted.ny(); ++j)
        for (std::size_t i = 0; i < extracted.nx(); ++i)
        {
            const double ref = reference(extracted.x(i), extracted.y(j));
            worst = std::max(worst, std::abs(extracted(i, j) - ref));
            scale = std::max(scale, std::abs(ref));
        }
    if (scale == 0.0)
        throw InputError("reference surface is identically zero on the grid");
    return worst / scale;
}

double reference_norm(const ScalarField& grid, const SurfaceFunction& reference)
{
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.ny(); ++j)
        for (std::size_t i = 0; i < grid.nx(); ++i)
        {
            const double v = reference(grid.x(i), grid.y(j));
            sum += v * v;
        }
    return std::sqrt(sum);
}

double fs_error(const ScalarField& fs_values, const ScalarField& extracted, double reference_norm)
{
    if (fs_values.nx() != extracted.nx() || fs_values.ny() != extracted.ny())
        throw UsageError("fs_error needs identical grids");
    if (!(reference_norm > 0.0))
        throw InputError("reference norm must be positive");
    double sum = 0.0;
    const auto a = fs_values.values();
    const auto b = extracted.values();
    for (std::size_t k = 0; k < a.size(); ++k)
        sum += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(sum) / reference_norm;
}

ScalarField evaluate_on_grid(const SpectralField& spec, const ScalarField& grid)
{
    std::vector<double> xs(grid.nx());
    std::vector<double> ys(grid.ny());
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = grid.x(i);
    for (std::size_t j = 0; j < ys.size(); ++j)
        ys[j] = grid.y(j);
    // coordinates are in the unscaled frame the coefficients were computed in
    SpectralField unscaled = scale_wavenumbers(spec, spec.length_x(), spec.length_y());
    const ComplexGrid values = evaluate_series(unscaled, xs, ys);
    if (values.imaginary_residue() > 1e-9)
        throw InvariantError("Fourier series of a real field has an imaginary part");
    ScalarField out(grid.nx(), grid.ny(), grid.length_x(), grid.length_y(), grid.mode());
    for (std::size_t k = 0; k < values.values.size(); ++k)
        out.values()[k] = values.values[k].real();
    return out;
}

namespace
{

// Shared by both directions so the transpose of one is bit-identical to the other.
// value(line, pos) reads the field with `pos` along the correlation axis.
template <typename At>
CorrelationCurve correlate(std::size_t lines, std::size_t count, double spacing, At value,
                           Direction direction, double mean)
{
    if (lines * count < 4 || lines < 2 || count < 2)
        throw UsageError("correlation needs at least a 2x2 field");

    std::vector<double> fluct(lines * count);
    for (std::size_t l = 0; l < lines; ++l)
        for (std::size_t p = 0; p < count; ++p)
            fluct[l * count + p] = value(l, p) - mean;

    std::vector<double> raw(count, 0.0);
    for (std::size_t s = 0; s <= count / 2; ++s)
    {
        double sum = 0.0;
        for (std::size_t l = 0; l < lines; ++l)
        {
            const double* row = &fluct[l * count];
            for (std::size_t p = 0; p < count; ++p)
                sum += row[p] * row[(p + s) % count];
        }
        raw[s] = sum;
        if (s > 0)
            raw[count - s] = sum;
    }
    if (!(raw[0] > 0.0))
        throw InputError("correlation of a constant field is undefined");

    CorrelationCurve curve;
    curve.direction = direction;
    curve.separations.resize(count);
    curve.values.resize(count);
    for (std::size_t s = 0; s < count; ++s)
    {
        curve.separations[s] = static_cast<double>(s) * spacing;
        curve.values[s] = raw[s] / raw[0];
    }
    return curve;
}

double plain_mean(const ScalarField& field)
{
    // sorted summation: independent of storage order, so a transposed field has the same mean
    std::vector<double> v(field.values().begin(), field.values().end());
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    for (double d : v)
        sum += d;
    return sum / static_cast<double>(v.size());
}

} // namespace

CorrelationCurve correlation_x(const ScalarField& field)
{
    return correlate(
        field.ny(), field.nx(), field.dx(), [&](std::size_t l, std::size_t p) { return field(p, l); },
        Direction::x, plain_mean(field));
}

CorrelationCurve correlation_y(const ScalarField& field)
{
    return correlate(
        field.nx(), field.ny(), field.dy(), [&](std::size_t l, std::size_t p) { return field(l, p); },
        Direction::y, plain_mean(field));
}

CorrelationCurve CorrelationCurve::half() const
{
    CorrelationCurve out;
    out.direction = direction;
    const std::size_t keep = values.size() / 2 + 1;
    out.separations.assign(separations.begin(), separations.begin() + static_cast<long>(keep));
    out.values.assign(values.begin(), values.begin() + static_cast<long>(keep));
    return out;
}

SpectrumComparison compare_spectra(const std::vector<std::pair<std::string, EnergySpectrum>>& spectra)
{
    if (spectra.empty())
        throw UsageError("nothing to compare");
    SpectrumComparison out;
    const std::size_t bins = spectra.front().second.size();
    const EnergySpectrum& ref = spectra.front().second;
    for (const auto& [label, spec] : spectra)
    {
        if (spec.size() != bins)
            throw UsageError("spectrum '" + label + "' has " + std::to_string(spec.size()) +
                             " bins, expected " + std::to_string(bins));
        out.labels.push_back(label);
        out.spectra.push_back(spec);
        std::vector<double> ratio(bins);
        for (std::size_t k = 0; k < bins; ++k)
        {
            if (spec[k] == 0.0 && ref[k] == 0.0)
                ratio[k] = std::numeric_limits<double>::quiet_NaN();
            else if (spec[k] == 0.0)
                ratio[k] = -std::numeric_limits<double>::infinity();
            else if (ref[k] == 0.0)
                ratio[k] = std::numeric_limits<double>::infinity();
            else
                ratio[k] = std::log10(spec[k] / ref[k]);
        }
        out.log_ratios.push_back(std::move(ratio));
    }
    return out;
}

} // namespace synrough
