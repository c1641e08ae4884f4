#ifndef SYNROUGH_ROGALLO_HPP
#define SYNROUGH_ROGALLO_HPP

#include <cstdint>
#include <random>

#include "synrough/spectral.hpp"

namespace synrough
{

/// Random spectral amplitudes sqrt(E(|k|) / (pi |k|)) e^{i theta} cos(phi),
/// theta ~ U[-pi, pi), phi ~ U[0, 2 pi). Each draw consumes two 64-bit words
/// from a mt19937_64 stream, so a seed reproduces the same sequence on every
/// platform.
class AlphaGenerator
{
  public:
    AlphaGenerator(EnergySpectrum spectrum, std::uint64_t seed);

    /// |k| is in wavenumber index units; E is read from its nearest bin.
    Complex draw(double k_mag);
    /// Same distribution with the ring's actual lattice mode count in place of
    /// 2 pi |k|: amplitude sqrt(2 E(ring) / modes). Summed over the ring, the
    /// expected |alpha|^2 is then E(ring) exactly.
    Complex draw_in_ring(std::size_t ring, std::size_t modes);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    const EnergySpectrum& spectrum() const { return spectrum_; }

  private:
    Complex random_phase(double energy, double modes);

    EnergySpectrum spectrum_;
    std::mt19937_64 engine_;
};

/// Two-component, divergence-free spectral vector field.
struct RogalloField
{
    SpectralField comp_n; ///< x component
    SpectralField comp_m; ///< y component
    std::uint64_t seed = 0;
};

/// Draws one Rogallo realization on an N x M mode grid.
///
/// Modes are visited n-major over the half plane (n > 0, or n = 0 and m > 0);
/// each gets a fresh alpha and its mirror (-n, -m) the conjugate, so both
/// components are Hermitian. Alpha is normalized by the number of lattice
/// modes in the mode's integer ring rather than by 2 pi |k|; on small rings
/// the two differ by up to ~25%, and only the lattice count makes the ensemble
/// mean of the binned spectrum equal the input. Components are alpha k_m / |k| and -alpha k_n / |k|.
/// The mean mode is zero. The Nyquist lines n = N/2 and m = M/2 are zero: their
/// aliased mirrors are not -k, and no nonzero amplitude there is both Hermitian
/// and orthogonal to k.
///
/// Synthesis runs on the 2 pi x 2 pi domain, so wavenumbers are the integers
/// n and m; use scale_wavenumbers to relabel. alpha / |k| is rounded to
/// 53 - 2B mantissa bits (B = bit width of the largest index), which makes
/// n c_n + m c_m = 0 hold exactly in floating point.
RogalloField synthesize_vector(const EnergySpectrum& spectrum, std::size_t nx, std::size_t ny,
                               std::uint64_t seed);

enum class Axis
{
    x,
    y
};

SpectralField component_field(const RogalloField& field, Axis axis);

/// Per-mode |c_n|^2 + |c_m|^2 spectrum of the vector field.
EnergySpectrum combined_spectrum(const RogalloField& field);

/// Pointwise sqrt(f_x^2 + f_y^2) of the physical components on `grid`.
ScalarField magnitude_field(const RogalloField& field, const PlotGrid& grid);

/// Spectral curl i k_n c_m - i k_m c_n, using the unscaled wavenumbers.
SpectralField vorticity_field(const RogalloField& field);

/// Same operator for an arbitrary pair of components.
SpectralField curl(const SpectralField& comp_x, const SpectralField& comp_y);

struct FilterSpec
{
    int cutoff = 32;

    void validate() const;
};

/// Zeroes every mode whose integer ring (sqrt(n^2 + m^2) rounded to nearest)
/// is at least `cutoff`, so every energy bin from `cutoff` up is exactly zero
/// and every bin below is untouched.
SpectralField top_hat_filter(const SpectralField& spec, const FilterSpec& filter);

/// Square of the physical vorticity on `grid`.
ScalarField enstrophy_field(const SpectralField& vorticity, const PlotGrid& grid);

} // namespace synrough

#endif // SYNROUGH_ROGALLO_HPP
