#include "synrough/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include "synrough/error.hpp"

namespace synrough
{

SpectralField::SpectralField(std::size_t nx, std::size_t ny, double length_x, double length_y)
    : nx_(nx), ny_(ny), length_x_(length_x), length_y_(length_y), scaled_x_(length_x),
      scaled_y_(length_y), coeffs_(nx * ny)
{
    if (nx < 2 || ny < 2 || nx % 2 != 0 || ny % 2 != 0)
        throw UsageError("spectral dimensions must be even and at least 2, got " +
                         std::to_string(nx) + "x" + std::to_string(ny));
    if (!(length_x > 0.0) || !(length_y > 0.0))
        throw UsageError("domain lengths must be positive");
}

void SpectralField::set_scaled_lengths(double lx, double ly)
{
    if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly))
        throw UsageError("scaled domain lengths must be positive");
    scaled_x_ = lx;
    scaled_y_ = ly;
}

namespace
{

int wrap_index(int v, int lo, int count)
{
    const int hi = lo + count - 1;
    while (v < lo)
        v += count;
    while (v > hi)
        v -= count;
    return v;
}

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

class Fft2
{
  public:
    Fft2(std::size_t nx, std::size_t ny, int sign) : size_(nx * ny)
    {
        buffer_ = fftw_alloc_complex(size_);
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), buffer_, buffer_, sign,
                                 FFTW_ESTIMATE);
    }
    ~Fft2()
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
        fftw_free(buffer_);
    }
    Fft2(const Fft2&) = delete;
    Fft2& operator=(const Fft2&) = delete;

    Complex* data() { return reinterpret_cast<Complex*>(buffer_); }
    void run() { fftw_execute(plan_); }

  private:
    std::size_t size_;
    fftw_complex* buffer_ = nullptr;
    fftw_plan plan_ = nullptr;
};

void require_even(const ScalarField& f)
{
    if (f.nx() % 2 != 0 || f.ny() % 2 != 0)
        throw UsageError("DFT needs even sample counts, got " + std::to_string(f.nx()) + "x" +
                         std::to_string(f.ny()));
}

// Period implied by the sample spacing.
SpectralField empty_spectrum_for(const ScalarField& f)
{
    return SpectralField(f.nx(), f.ny(), f.dx() * static_cast<double>(f.nx()),
                         f.dy() * static_cast<double>(f.ny()));
}

} // namespace

double SpectralField::hermitian_defect() const
{
    double worst = 0.0;
    const int nc = static_cast<int>(nx_);
    const int mc = static_cast<int>(ny_);
    for (int m = m_min(); m <= m_max(); ++m)
        for (int n = n_min(); n <= n_max(); ++n)
        {
            const Complex mirror = at(wrap_index(-n, n_min(), nc), wrap_index(-m, m_min(), mc));
            worst = std::max(worst, std::abs(at(n, m) - std::conj(mirror)));
        }
    return worst;
}

bool SpectralField::is_hermitian(double tol) const
{
    double scale = 0.0;
    for (const auto& c : coeffs_)
        scale = std::max(scale, std::abs(c));
    return hermitian_defect() <= tol * std::max(scale, 1e-300);
}

SpectralField dft2(const ScalarField& samples)
{
    require_even(samples);
    const std::size_t nx = samples.nx();
    const std::size_t ny = samples.ny();
    Fft2 fft(nx, ny, FFTW_FORWARD);
    Complex* buf = fft.data();
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            buf[j * nx + i] = samples(i, j);
    fft.run();

    SpectralField out = empty_spectrum_for(samples);
    const double norm = 1.0 / static_cast<double>(nx * ny);
    const int nxi = static_cast<int>(nx);
    const int nyi = static_cast<int>(ny);
    for (int m = out.m_min(); m <= out.m_max(); ++m)
        for (int n = out.n_min(); n <= out.n_max(); ++n)
        {
            const auto col = static_cast<std::size_t>((n + nxi) % nxi);
            const auto row = static_cast<std::size_t>((m + nyi) % nyi);
            out.at(n, m) = buf[row * nx + col] * norm;
        }
    return out;
}

SpectralField dft2_direct(const ScalarField& samples)
{
    require_even(samples);
    const std::size_t nx = samples.nx();
    const std::size_t ny = samples.ny();
    SpectralField out = empty_spectrum_for(samples);

    // exp(-2 pi i q / N) for q = 0..N-1; n * i is reduced mod N before lookup
    auto twiddles = [](std::size_t count) {
        std::vector<Complex> t(count);
        for (std::size_t q = 0; q < count; ++q)
            t[q] = std::polar(1.0, -two_pi * static_cast<double>(q) / static_cast<double>(count));
        return t;
    };
    const auto tx = twiddles(nx);
    const auto ty = twiddles(ny);
    const auto nxl = static_cast<long>(nx);
    const auto nyl = static_cast<long>(ny);
    const double norm = 1.0 / static_cast<double>(nx * ny);

    for (int m = out.m_min(); m <= out.m_max(); ++m)
        for (int n = out.n_min(); n <= out.n_max(); ++n)
        {
            Complex sum = 0.0;
            for (std::size_t j = 0; j < ny; ++j)
            {
                const Complex ey = ty[static_cast<std::size_t>(((m * static_cast<long>(j)) % nyl + nyl) % nyl)];
                for (std::size_t i = 0; i < nx; ++i)
                {
                    const Complex ex =
                        tx[static_cast<std::size_t>(((n * static_cast<long>(i)) % nxl + nxl) % nxl)];
                    sum += samples(i, j) * ex * ey;
                }
            }
            out.at(n, m) = sum * norm;
        }
    return out;
}

double ComplexGrid::imaginary_residue() const
{
    double re = 0.0;
    double im = 0.0;
    for (const auto& v : values)
    {
        re = std::max(re, std::abs(v.real()));
        im = std::max(im, std::abs(v.imag()));
    }
    if (re == 0.0)
        return im == 0.0 ? 0.0 : INFINITY;
    return im / re;
}

namespace
{

ComplexGrid evaluate_with_units(const SpectralField& spec, double kx_unit, double ky_unit,
                                std::span<const double> xs, std::span<const double> ys)
{
    const std::size_t px = xs.size();
    const std::size_t py = ys.size();

    auto basis = [](int lo, int hi, double unit, std::span<const double> pts) {
        std::vector<Complex> b(static_cast<std::size_t>(hi - lo + 1) * pts.size());
        for (int n = lo; n <= hi; ++n)
            for (std::size_t p = 0; p < pts.size(); ++p)
            {
                const double phase = unit * n * pts[p];
                b[static_cast<std::size_t>(n - lo) * pts.size() + p] =
                    n == hi ? Complex(std::cos(phase), 0.0) : std::polar(1.0, phase);
            }
        return b;
    };
    const auto bx = basis(spec.n_min(), spec.n_max(), kx_unit, xs);
    const auto by = basis(spec.m_min(), spec.m_max(), ky_unit, ys);

    const std::size_t nx = spec.nx();
    const std::size_t ny = spec.ny();
    // partial[n][q] = sum_m c(n, m) by[m][q]
    std::vector<Complex> partial(nx * py);
    const auto coeffs = spec.coeffs();
    for (std::size_t mi = 0; mi < ny; ++mi)
        for (std::size_t ni = 0; ni < nx; ++ni)
        {
            const Complex c = coeffs[mi * nx + ni];
            if (c == Complex{})
                continue;
            const Complex* row = &by[mi * py];
            Complex* dst = &partial[ni * py];
            for (std::size_t q = 0; q < py; ++q)
                dst[q] += c * row[q];
        }

    ComplexGrid out{px, py, std::vector<Complex>(px * py)};
    for (std::size_t ni = 0; ni < nx; ++ni)
    {
        const Complex* bxn = &bx[ni * px];
        const Complex* g = &partial[ni * py];
        for (std::size_t q = 0; q < py; ++q)
        {
            const Complex gq = g[q];
            if (gq == Complex{})
                continue;
            Complex* dst = &out.values[q * px];
            for (std::size_t p = 0; p < px; ++p)
                dst[p] += bxn[p] * gq;
        }
    }
    return out;
}

} // namespace

ComplexGrid evaluate_series(const SpectralField& spec, std::span<const double> xs,
                            std::span<const double> ys)
{
    return evaluate_with_units(spec, spec.scale_s(), spec.scale_r(), xs, ys);
}

namespace
{

ScalarField take_real(const ComplexGrid& grid, double lx, double ly, SamplingMode mode)
{
    const double residue = grid.imaginary_residue();
    if (residue > 1e-9)
        throw InvariantError("inverse transform is not real: imaginary residue " +
                             std::to_string(residue) + " (non-Hermitian spectrum)");
    std::vector<double> values(grid.values.size());
    std::transform(grid.values.begin(), grid.values.end(), values.begin(),
                   [](const Complex& c) { return c.real(); });
    return {grid.nx, grid.ny, lx, ly, mode, std::move(values)};
}

} // namespace

ScalarField idft2(const SpectralField& spec, const PlotGrid& grid)
{
    if (grid.nx < 1 || grid.ny < 1)
        throw UsageError("plot resolution must be at least 1x1");
    auto coords = [&](std::size_t count, double length) {
        std::vector<double> c(count);
        const double step = sample_spacing(length, count, grid.mode);
        for (std::size_t i = 0; i < count; ++i)
            c[i] = static_cast<double>(i) * step;
        return c;
    };
    // evaluated in the unscaled frame so that scaling changes labels only, bit for bit
    const auto xs = coords(grid.nx, spec.length_x());
    const auto ys = coords(grid.ny, spec.length_y());
    return take_real(evaluate_with_units(spec, two_pi / spec.length_x(), two_pi / spec.length_y(), xs, ys),
                     spec.scaled_length_x(), spec.scaled_length_y(), grid.mode);
}

ScalarField idft2_on_samples(const SpectralField& spec)
{
    const std::size_t nx = spec.nx();
    const std::size_t ny = spec.ny();
    Fft2 fft(nx, ny, FFTW_BACKWARD);
    Complex* buf = fft.data();
    const int nxi = static_cast<int>(nx);
    const int nyi = static_cast<int>(ny);
    for (int m = spec.m_min(); m <= spec.m_max(); ++m)
        for (int n = spec.n_min(); n <= spec.n_max(); ++n)
            buf[static_cast<std::size_t>((m + nyi) % nyi) * nx +
                static_cast<std::size_t>((n + nxi) % nxi)] = spec.at(n, m);
    fft.run();
    ComplexGrid grid{nx, ny, std::vector<Complex>(buf, buf + nx * ny)};
    return take_real(grid, spec.scaled_length_x(), spec.scaled_length_y(), SamplingMode::periodic);
}

double EnergySpectrum::total() const { return std::accumulate(bins.begin(), bins.end(), 0.0); }

double EnergySpectrum::at_wavenumber(double k_mag) const
{
    const auto bin = static_cast<std::size_t>(std::floor(k_mag + 0.5));
    return bin < bins.size() ? bins[bin] : 0.0;
}

std::size_t radial_bin(int n, int m)
{
    return static_cast<std::size_t>(std::floor(std::sqrt(double(n) * n + double(m) * m) + 0.5));
}

std::size_t spectrum_bin_count(std::size_t nx, std::size_t ny)
{
    const double hx = static_cast<double>(nx) / 2.0;
    const double hy = static_cast<double>(ny) / 2.0;
    return static_cast<std::size_t>(std::ceil(std::sqrt(hx * hx + hy * hy))) + 1;
}

EnergySpectrum energy_spectrum(const SpectralField& spec)
{
    EnergySpectrum out{std::vector<double>(spectrum_bin_count(spec.nx(), spec.ny()), 0.0)};
    for (int m = spec.m_min(); m <= spec.m_max(); ++m)
        for (int n = spec.n_min(); n <= spec.n_max(); ++n)
            out.bins[radial_bin(n, m)] += std::norm(spec.at(n, m));
    return out;
}

EnergySpectrum energy_spectrum(const SpectralField& a, const SpectralField& b)
{
    if (a.nx() != b.nx() || a.ny() != b.ny())
        throw UsageError("component spectra differ in size");
    EnergySpectrum out{std::vector<double>(spectrum_bin_count(a.nx(), a.ny()), 0.0)};
    for (int m = a.m_min(); m <= a.m_max(); ++m)
        for (int n = a.n_min(); n <= a.n_max(); ++n)
            out.bins[radial_bin(n, m)] += std::norm(a.at(n, m)) + std::norm(b.at(n, m));
    return out;
}

std::vector<std::size_t> ring_mode_counts(std::size_t nx, std::size_t ny)
{
    std::vector<std::size_t> counts(spectrum_bin_count(nx, ny), 0);
    const int hx = static_cast<int>(nx / 2);
    const int hy = static_cast<int>(ny / 2);
    for (int m = -hy + 1; m <= hy; ++m)
        for (int n = -hx + 1; n <= hx; ++n)
            ++counts[radial_bin(n, m)];
    return counts;
}

SpectralField scale_wavenumbers(const SpectralField& spec, double scaled_length_x,
                                double scaled_length_y)
{
    SpectralField out = spec;
    out.set_scaled_lengths(scaled_length_x, scaled_length_y);
    return out;
}

} // namespace synrough
