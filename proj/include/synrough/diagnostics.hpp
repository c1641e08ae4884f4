#ifndef SYNROUGH_DIAGNOSTICS_HPP
#define SYNROUGH_DIAGNOSTICS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "synrough/field.hpp"
#include "synrough/spectral.hpp"

namespace synrough
{

using SurfaceFunction = std::function<double(double x, double y)>;

/// max |f_lk - f(x_l, y_k)| / max |f(x_l, y_k)| over the grid nodes.
double extraction_error(const ScalarField& extracted, const SurfaceFunction& reference);

/// Discrete 2-norm of `reference` sampled on the nodes of `grid`.
double reference_norm(const ScalarField& grid, const SurfaceFunction& reference);

/// ||fs - extracted||_2 / reference_norm on identical grids.
double fs_error(const ScalarField& fs_values, const ScalarField& extracted, double reference_norm);

/// Fourier series of `spec` evaluated on the nodes of `grid` (coordinates as
/// the grid defines them, not rescaled).
ScalarField evaluate_on_grid(const SpectralField& spec, const ScalarField& grid);

enum class Direction
{
    x,
    y
};

/// Normalized circular autocorrelation along one axis.
///
/// With fluctuations f' = f - mean(f), raw(s) = sum over lines and positions of
/// f'(p) f'(p + s mod count), and value(s) = raw(s) / raw(0). Separations are
/// s * spacing in the field's length units. value(s) == value(count - s) exactly.
struct CorrelationCurve
{
    Direction direction = Direction::x;
    std::vector<double> separations;
    std::vector<double> values;

    /// Entries up to and including the midpoint separation.
    CorrelationCurve half() const;
};

CorrelationCurve correlation_x(const ScalarField& field);
CorrelationCurve correlation_y(const ScalarField& field);

/// Spectra aligned by bin, with log10(E / E_reference) for every entry against
/// the first. Ratios of zero bins are -inf (or nan when both are zero).
struct SpectrumComparison
{
    std::vector<std::string> labels;
    std::vector<EnergySpectrum> spectra;
    std::vector<std::vector<double>> log_ratios;

    std::size_t bin_count() const { return spectra.empty() ? 0 : spectra.front().size(); }
};

SpectrumComparison compare_spectra(const std::vector<std::pair<std::string, EnergySpectrum>>& spectra);

} // namespace synrough

#endif // SYNROUGH_DIAGNOSTICS_HPP
