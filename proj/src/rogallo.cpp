#include "synrough/rogallo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "synrough/error.hpp"

namespace synrough
{

AlphaGenerator::AlphaGenerator(EnergySpectrum spectrum, std::uint64_t seed)
    : spectrum_(std::move(spectrum)), engine_(seed)
{
}

double AlphaGenerator::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex AlphaGenerator::random_phase(double energy, double modes)
{
    const double theta = -std::numbers::pi + two_pi * uniform();
    const double phi = two_pi * uniform();
    if (energy < 0.0)
        throw InputError("negative energy in spectrum bin");
    return std::polar(std::sqrt(2.0 * energy / modes), theta) * std::cos(phi);
}

Complex AlphaGenerator::draw(double k_mag)
{
    if (!(k_mag > 0.0))
        throw UsageError("alpha is singular at |k| = 0");
    // 2 E / (2 pi |k|) = E / (pi |k|)
    return random_phase(spectrum_.at_wavenumber(k_mag), two_pi * k_mag);
}

Complex AlphaGenerator::draw_in_ring(std::size_t ring, std::size_t modes)
{
    if (modes == 0)
        throw UsageError("ring has no modes");
    return random_phase(ring < spectrum_.size() ? spectrum_[ring] : 0.0, static_cast<double>(modes));
}

namespace
{

double trim_mantissa(double v, int bits)
{
    if (v == 0.0)
        return 0.0;
    int exponent = 0;
    const double frac = std::frexp(v, &exponent);
    return std::ldexp(std::round(std::ldexp(frac, bits)), exponent - bits);
}

} // namespace

RogalloField synthesize_vector(const EnergySpectrum& spectrum, std::size_t nx, std::size_t ny,
                               std::uint64_t seed)
{
    if (nx < 4 || ny < 4 || nx % 2 != 0 || ny % 2 != 0)
        throw UsageError("synthesis grid must be even and at least 4x4, got " +
                         std::to_string(nx) + "x" + std::to_string(ny));
    const int n_hi = static_cast<int>(nx / 2) - 1;
    const int m_hi = static_cast<int>(ny / 2) - 1;
    if (spectrum.size() < radial_bin(n_hi, m_hi) + 1)
        throw UsageError("energy spectrum has " + std::to_string(spectrum.size()) +
                         " bins, too short for a " + std::to_string(nx) + "x" + std::to_string(ny) +
                         " synthesis");

    RogalloField out{SpectralField(nx, ny), SpectralField(nx, ny), seed};
    AlphaGenerator alpha(spectrum, seed);
    const int index_bits = std::bit_width(static_cast<unsigned>(std::max(n_hi, m_hi)));
    const int kept_bits = 53 - 2 * index_bits;

    // modes that actually receive an amplitude, per ring
    std::vector<std::size_t> ring_modes(spectrum.size(), 0);
    for (int n = -n_hi; n <= n_hi; ++n)
        for (int m = -m_hi; m <= m_hi; ++m)
            if (n != 0 || m != 0)
                ++ring_modes[radial_bin(n, m)];

    for (int n = 0; n <= n_hi; ++n)
        for (int m = (n == 0 ? 1 : -m_hi); m <= m_hi; ++m)
        {
            const double k_mag = std::hypot(double(n), double(m));
            const std::size_t ring = radial_bin(n, m);
            const Complex q = alpha.draw_in_ring(ring, ring_modes[ring]) / k_mag;
            const Complex qt(trim_mantissa(q.real(), kept_bits), trim_mantissa(q.imag(), kept_bits));
            const Complex cn = qt * double(m);
            const Complex cm = -qt * double(n);
            out.comp_n.at(n, m) = cn;
            out.comp_m.at(n, m) = cm;
            out.comp_n.at(-n, -m) = std::conj(cn);
            out.comp_m.at(-n, -m) = std::conj(cm);
        }
    return out;
}

SpectralField component_field(const RogalloField& field, Axis axis)
{
    return axis == Axis::x ? field.comp_n : field.comp_m;
}

EnergySpectrum combined_spectrum(const RogalloField& field)
{
    return energy_spectrum(field.comp_n, field.comp_m);
}

ScalarField magnitude_field(const RogalloField& field, const PlotGrid& grid)
{
    const ScalarField fx = idft2(field.comp_n, grid);
    const ScalarField fy = idft2(field.comp_m, grid);
    ScalarField out = fx;
    auto dst = out.values();
    const auto ys = fy.values();
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = std::hypot(dst[i], ys[i]);
    return out;
}

SpectralField curl(const SpectralField& comp_x, const SpectralField& comp_y)
{
    if (comp_x.nx() != comp_y.nx() || comp_x.ny() != comp_y.ny())
        throw UsageError("vector components differ in size");
    SpectralField out = comp_x;
    const Complex i_unit(0.0, 1.0);
    for (int m = out.m_min(); m <= out.m_max(); ++m)
        for (int n = out.n_min(); n <= out.n_max(); ++n)
            out.at(n, m) = i_unit * comp_x.k_x(n) * comp_y.at(n, m) -
                           i_unit * comp_x.k_y(m) * comp_x.at(n, m);
    return out;
}

SpectralField vorticity_field(const RogalloField& field)
{
    return curl(field.comp_n, field.comp_m);
}

void FilterSpec::validate() const
{
    if (cutoff < 1)
        throw UsageError("filter cutoff must be at least 1, got " + std::to_string(cutoff));
}

SpectralField top_hat_filter(const SpectralField& spec, const FilterSpec& filter)
{
    filter.validate();
    SpectralField out = spec;
    const auto cutoff = static_cast<std::size_t>(filter.cutoff);
    // cut on the integer ring, so the spectrum drops to zero from bin `cutoff` on
    for (int m = out.m_min(); m <= out.m_max(); ++m)
        for (int n = out.n_min(); n <= out.n_max(); ++n)
            if (radial_bin(n, m) >= cutoff)
                out.at(n, m) = 0.0;
    return out;
}

ScalarField enstrophy_field(const SpectralField& vorticity, const PlotGrid& grid)
{
    ScalarField out = idft2(vorticity, grid);
    for (double& v : out.values())
        v *= v;
    return out;
}

} // namespace synrough
