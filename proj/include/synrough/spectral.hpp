#ifndef SYNROUGH_SPECTRAL_HPP
#define SYNROUGH_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "synrough/field.hpp"

namespace synrough
{

using Complex = std::complex<double>;

/// Fourier coefficients c(n, m) for n in [-N/2 + 1, N/2], m in [-M/2 + 1, M/2].
///
/// `length_x/y` is the period the coefficients were computed on; the scaled
/// lengths only relabel coordinates when the series is evaluated
/// (k~_n = 2 pi n / scaled_length_x). Coefficients never change under scaling.
class SpectralField
{
  public:
    SpectralField() = default;
    SpectralField(std::size_t nx, std::size_t ny, double length_x = two_pi,
                  double length_y = two_pi);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    int n_min() const { return -static_cast<int>(nx_ / 2) + 1; }
    int n_max() const { return static_cast<int>(nx_ / 2); }
    int m_min() const { return -static_cast<int>(ny_ / 2) + 1; }
    int m_max() const { return static_cast<int>(ny_ / 2); }

    double length_x() const { return length_x_; }
    double length_y() const { return length_y_; }
    double scaled_length_x() const { return scaled_x_; }
    double scaled_length_y() const { return scaled_y_; }
    void set_scaled_lengths(double lx, double ly);
    /// s = 2 pi / L~_x and r = 2 pi / L~_y.
    double scale_s() const { return two_pi / scaled_x_; }
    double scale_r() const { return two_pi / scaled_y_; }

    /// Unscaled wavenumbers 2 pi n / L_x and 2 pi m / L_y (exactly n, m on a 2 pi domain).
    double k_x(int n) const { return length_x_ == two_pi ? n : two_pi * n / length_x_; }
    double k_y(int m) const { return length_y_ == two_pi ? m : two_pi * m / length_y_; }

    Complex& at(int n, int m) { return coeffs_[index(n, m)]; }
    const Complex& at(int n, int m) const { return coeffs_[index(n, m)]; }

    /// Row-major storage, row m - m_min, column n - n_min.
    std::span<Complex> coeffs() { return coeffs_; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    /// Largest |c(n, m) - conj(c(-n, -m))| with mirror indices taken modulo N and M.
    double hermitian_defect() const;
    bool is_hermitian(double tol = 1e-12) const;

  private:
    std::size_t index(int n, int m) const
    {
        return static_cast<std::size_t>(m - m_min()) * nx_ + static_cast<std::size_t>(n - n_min());
    }

    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    double length_x_ = two_pi;
    double length_y_ = two_pi;
    double scaled_x_ = two_pi;
    double scaled_y_ = two_pi;
    std::vector<Complex> coeffs_;
};

/// Forward transform with 1/(NM) normalization:
///   c(n, m) = 1/(NM) sum_ij f_ij exp(-i k_n x_i) exp(-i k_m y_j).
/// Periodic fields use their own length as the period. Endpoint samples are
/// treated as one period of length N * dx, the period a DFT of those samples
/// implies. FFT backed.
SpectralField dft2(const ScalarField& samples);

/// The same sum evaluated term by term in O(N^2 M^2); kept as the reference
/// for the fast path.
SpectralField dft2_direct(const ScalarField& samples);

/// Evaluation grid for the Fourier series over the scaled domain.
struct PlotGrid
{
    std::size_t nx = 500;
    std::size_t ny = 500;
    SamplingMode mode = SamplingMode::endpoint;
};

struct ComplexGrid
{
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<Complex> values;

    /// max |Im| / max |Re| (0 for an all-zero grid).
    double imaginary_residue() const;
};

/// Evaluates sum_nm c(n, m) exp(i k~_n x) exp(i k~_m y) on the tensor grid xs by ys.
/// Nyquist terms (n = N/2 or m = M/2) are split evenly between +k and -k, which
/// matches the plain sum on the sampling grid and keeps the series of a real
/// field real between samples.
ComplexGrid evaluate_series(const SpectralField& spec, std::span<const double> xs,
                            std::span<const double> ys);

/// Real field on `grid` over [0, L~_x] x [0, L~_y]. Throws InvariantError if
/// the imaginary residue exceeds 1e-9 relative.
ScalarField idft2(const SpectralField& spec, const PlotGrid& grid);

/// Inverse on the field's own periodic sampling grid (FFT backed).
ScalarField idft2_on_samples(const SpectralField& spec);

/// Energy per integer radial wavenumber bin, bin K collecting every mode with
/// K - 0.5 <= sqrt(n^2 + m^2) < K + 0.5. Plain sum of |c|^2.
struct EnergySpectrum
{
    std::vector<double> bins;

    std::size_t size() const { return bins.size(); }
    double operator[](std::size_t k) const { return bins[k]; }
    double total() const;
    /// Value of the bin nearest to |k|; zero beyond the last bin.
    double at_wavenumber(double k_mag) const;
};

/// Integer radial bin of mode (n, m).
std::size_t radial_bin(int n, int m);

/// ceil(sqrt((N/2)^2 + (M/2)^2)) + 1 bins, covering every mode.
std::size_t spectrum_bin_count(std::size_t nx, std::size_t ny);

EnergySpectrum energy_spectrum(const SpectralField& spec);

/// Spectrum of a two-component field: |a|^2 + |b|^2 per mode.
EnergySpectrum energy_spectrum(const SpectralField& a, const SpectralField& b);

/// Number of lattice modes falling in each bin.
std::vector<std::size_t> ring_mode_counts(std::size_t nx, std::size_t ny);

/// Relabels the domain as L~_x by L~_y; coefficients are untouched.
SpectralField scale_wavenumbers(const SpectralField& spec, double scaled_length_x,
                                double scaled_length_y);

} // namespace synrough

#endif // SYNROUGH_SPECTRAL_HPP
