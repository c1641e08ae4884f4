// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "synrough/colormap.hpp"
#include "synrough/diagnostics.hpp"
#include "synrough/rogallo.hpp"
#include "synrough/spectral.hpp"
#include "test_support.hpp"

using namespace synrough;

namespace
{

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("%s criterion %d: %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

class Stopwatch
{
  public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Input spectrum shared by the synthesis criteria: E(k) = k exp(-k / 8).
EnergySpectrum analytic_spectrum() { return testing::decaying_spectrum(spectrum_bin_count(64, 64)); }

std::vector<double> ensemble_mean(const EnergySpectrum& input, std::uint64_t first_seed, std::size_t count)
{
    std::vector<double> sum(input.size(), 0.0);
    for (std::size_t e = 0; e < count; ++e)
    {
        const auto bins = combined_spectrum(synthesize_vector(input, 64, 64, first_seed + e)).bins;
        for (std::size_t k = 0; k < sum.size(); ++k)
            sum[k] += bins[k];
    }
    for (double& v : sum)
        v /= static_cast<double>(count);
    return sum;
}

double relative_max_diff(std::span<const double> a, std::span<const double> b)
{
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
    {
        num = std::max(num, std::abs(a[k] - b[k]));
        den = std::max(den, std::abs(b[k]));
    }
    return num / den;
}

void extraction_error_check()
{
    Stopwatch clock;
    const auto small = extract_field(testing::render_test_surface(368, 369), testing::test_range);
    const auto large = extract_field(testing::render_test_surface(1486, 1486), testing::test_range);
    const double e_small = extraction_error(small.values, testing::test_surface);
    const double e_large = extraction_error(large.values, testing::test_surface);
    const double t = clock.seconds();
    report(1, e_small <= 0.08 && e_large <= 0.03 && t < 10.0, "extraction error",
           fmt("eps_E 368x369 = %.5f (<= 0.08), 1486x1486 = %.5f (<= 0.03), %.2f s (< 10 s)", e_small,
               e_large, t));
}

void fs_error_check()
{
    Stopwatch clock;
    const auto f = extract_field(testing::render_test_surface(368, 369), testing::test_range).values;
    const double ref = reference_norm(f, testing::test_surface);
    auto eps = [&](std::size_t n, SamplingMode mode) {
        const auto samples = resample(f, {n, n, mode});
        return fs_error(evaluate_on_grid(dft2(samples), f), f, ref);
    };
    const double e64 = eps(64, SamplingMode::periodic);
    const double e256 = eps(256, SamplingMode::periodic);
    const double e256n = eps(256, SamplingMode::endpoint);
    const double t = clock.seconds();
    report(2, e64 <= 0.016 && e256 <= 0.005 && e256n <= 0.004 && e64 > e256 && t < 30.0,
           "Fourier series approximation error",
           fmt("eps_F 64 periodic = %.5f%% (<= 1.6%%), 256 periodic = %.5f%% (<= 0.5%%), "
               "256 non-periodic = %.5f%% (<= 0.4%%), 64 > 256: %s, %.2f s (< 30 s)",
               100 * e64, 100 * e256, 100 * e256n, e64 > e256 ? "yes" : "no", t));
}

void transform_check()
{
    double round_trip = 0.0, parseval = 0.0, fast_direct = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        const auto f = testing::random_field(64, 64, seed);
        const auto s = dft2(f);
        const auto back = idft2(s, {64, 64, SamplingMode::periodic});
        round_trip = std::max(round_trip, relative_max_diff(back.values(), f.values()));

        const double phys =
            std::inner_product(f.values().begin(), f.values().end(), f.values().begin(), 0.0) /
            static_cast<double>(f.size());
        parseval = std::max(parseval, std::abs(energy_spectrum(s).total() - phys) / phys);

        const auto d = dft2_direct(f);
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < s.coeffs().size(); ++k)
        {
            num = std::max(num, std::abs(s.coeffs()[k] - d.coeffs()[k]));
            den = std::max(den, std::abs(d.coeffs()[k]));
        }
        fast_direct = std::max(fast_direct, num / den);
    }
    report(3, round_trip <= 1e-10 && parseval <= 1e-10 && fast_direct <= 1e-10, "transform correctness",
           fmt("20 random 64x64 fields: round trip %.2e, Parseval %.2e, FFT vs direct %.2e (all <= 1e-10)",
               round_trip, parseval, fast_direct));
}

void rogallo_invariants_check()
{
    const auto input = analytic_spectrum();
    std::size_t divergence_violations = 0;
    double residue = 0.0;
    bool deterministic = true;
    // off the sampling grid, so the Nyquist handling is exercised as well
    std::vector<double> xs(97), ys(83);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = two_pi * static_cast<double>(i) / 96.0;
    for (std::size_t j = 0; j < ys.size(); ++j)
        ys[j] = two_pi * static_cast<double>(j) / 82.0;

    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        const auto rf = synthesize_vector(input, 64, 64, seed);
        for (int m = rf.comp_n.m_min(); m <= rf.comp_n.m_max(); ++m)
            for (int n = rf.comp_n.n_min(); n <= rf.comp_n.n_max(); ++n)
                if (static_cast<double>(n) * rf.comp_n.at(n, m) + static_cast<double>(m) * rf.comp_m.at(n, m) !=
                    Complex(0.0, 0.0))
                    ++divergence_violations;

        const auto vort = vorticity_field(rf);
        for (const SpectralField* s : {&rf.comp_n, &rf.comp_m, &vort})
            residue = std::max(residue, evaluate_series(*s, xs, ys).imaginary_residue());
        residue = std::max(residue, evaluate_series(top_hat_filter(vort, {}), xs, ys).imaginary_residue());

        const auto again = synthesize_vector(input, 64, 64, seed);
        deterministic &= std::memcmp(rf.comp_n.coeffs().data(), again.comp_n.coeffs().data(),
                                     rf.comp_n.coeffs().size_bytes()) == 0 &&
                         std::memcmp(rf.comp_m.coeffs().data(), again.comp_m.coeffs().data(),
                                     rf.comp_m.coeffs().size_bytes()) == 0;
    }
    report(4, divergence_violations == 0 && residue <= 1e-9 && deterministic, "Rogallo invariants",
           fmt("20 seeds: modes with k.f != 0: %zu, max imaginary residue %.2e (<= 1e-9), byte-identical "
               "per seed: %s",
               divergence_violations, residue, deterministic ? "yes" : "no"));
}

void spectrum_recovery_check()
{
    Stopwatch clock;
    const auto input = analytic_spectrum();
    const auto mean50 = ensemble_mean(input, 1, 50);
    double worst = 0.0;
    std::size_t worst_k = 0;
    for (std::size_t k = 1; k < 32; ++k)
    {
        const double rel = std::abs(mean50[k] - input[k]) / input[k];
        if (rel > worst)
            worst = rel, worst_k = k;
    }

    // variance of the bin means across independent replicate ensembles, pooled
    // over bins; relative variance of a bin scales as 1 / (modes in the ring),
    // so weighting by the mode count gives every bin an equal share
    const std::size_t replicates = 60;
    const auto modes = ring_mode_counts(64, 64);
    std::vector<std::vector<double>> m50, m100;
    for (std::size_t r = 0; r < replicates; ++r)
    {
        const std::uint64_t base = 100'000 + 1'000 * r;
        m50.push_back(ensemble_mean(input, base, 50));
        m100.push_back(ensemble_mean(input, base + 500, 100));
    }
    auto pooled_variance = [&](const std::vector<std::vector<double>>& means) {
        double total = 0.0;
        for (std::size_t k = 1; k < 32; ++k)
        {
            double mu = 0.0, var = 0.0;
            for (const auto& m : means)
                mu += m[k];
            mu /= static_cast<double>(replicates);
            for (const auto& m : means)
                var += (m[k] - mu) * (m[k] - mu);
            total += static_cast<double>(modes[k]) * var / static_cast<double>(replicates - 1) /
                     (input[k] * input[k]);
        }
        return total;
    };
    const double ratio = pooled_variance(m50) / pooled_variance(m100);
    const double t = clock.seconds();
    report(5, worst <= 0.25 && ratio >= 1.4 && ratio <= 2.6 && t < 120.0, "spectrum recovery",
           fmt("50-seed mean within %.1f%% of input for 1 <= |k| < 32 (worst at |k| = %zu, <= 25%%); "
               "variance ratio 50 vs 100 members = %.3f over %zu replicates (2 +- 30%%); %.1f s (< 120 s)",
               100 * worst, worst_k, ratio, replicates, t));
}

void filter_check()
{
    const auto input = analytic_spectrum();
    bool zero_above = true, unchanged_below = true;
    std::vector<double> vort_mean(input.size(), 0.0), x_mean(input.size(), 0.0), y_mean(input.size(), 0.0);
    const std::size_t members = 50;
    for (std::uint64_t seed = 1; seed <= members; ++seed)
    {
        const auto rf = synthesize_vector(input, 64, 64, seed);
        const auto vort = vorticity_field(rf);
        const auto full = energy_spectrum(vort);
        const auto cut = energy_spectrum(top_hat_filter(vort, {32}));
        for (std::size_t k = 0; k < cut.size(); ++k)
        {
            if (k >= 32)
                zero_above &= cut[k] == 0.0;
            else
                unchanged_below &= cut[k] == full[k];
        }
        const auto ex = energy_spectrum(rf.comp_n);
        const auto ey = energy_spectrum(rf.comp_m);
        for (std::size_t k = 0; k < input.size(); ++k)
        {
            vort_mean[k] += full[k] / members;
            x_mean[k] += ex[k] / members;
            y_mean[k] += ey[k] / members;
        }
    }
    const double ratio = vort_mean[16] / std::max(x_mean[16], y_mean[16]);
    report(6, zero_above && unchanged_below && ratio > 10.0, "filter semantics",
           fmt("filtered vorticity bins >= 32 exactly zero: %s, bins < 32 identical: %s; "
               "ensemble vorticity/component ratio at |k| = 16 = %.1f (> 10)",
               zero_above ? "yes" : "no", unchanged_below ? "yes" : "no", ratio));
}

double mean_over(const std::vector<double>& v, std::size_t from, std::size_t to)
{
    return std::accumulate(v.begin() + from, v.begin() + to, 0.0) / static_cast<double>(to - from);
}

void anisotropy_check()
{
    const std::size_t n = 128;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> noise;
    ScalarField ridged(n, n, two_pi, two_pi, SamplingMode::endpoint);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            ridged(i, j) = std::sin(8.0 * ridged.x(i)) + 0.1 * noise(rng);

    const auto rx = correlation_x(ridged).half();
    const auto ry = correlation_y(ridged).half();
    const double ry_min = *std::min_element(ry.values.begin(), ry.values.end());

    // separations are in scaled units r_x / s; s = 1 on a 2 pi domain
    std::size_t first_zero = rx.values.size();
    for (std::size_t s = 1; s < rx.values.size(); ++s)
        if (rx.values[s] <= 0.0)
        {
            first_zero = s;
            break;
        }
    const bool crosses = first_zero < rx.values.size() && rx.separations[first_zero] < 1.0;
    double beyond = 0.0;
    for (std::size_t s = first_zero; s < rx.values.size(); ++s)
        beyond = std::max(beyond, std::abs(rx.values[s]));
    const bool bounded = crosses && beyond <= 0.5;

    // y-component of a Rogallo realization from the spectrum-recovery input,
    // observed on the non-periodic correlation grid
    const auto rf = synthesize_vector(analytic_spectrum(), 64, 64, 1);
    const auto fy = idft2(component_field(rf, Axis::y), {n, n, SamplingMode::endpoint});
    const auto cx = correlation_x(fy).values;
    const auto cy = correlation_y(fy).values;
    const double qx = mean_over(cx, 0, n / 4), qy = mean_over(cy, 0, n / 4);

    report(7, ry_min > 0.5 && crosses && bounded && qy > qx, "correlation anisotropy",
           fmt("ridged surface: min R_y up to midpoint = %.3f (> 0.5), R_x first zero at r = %.3f (< 1), "
               "max |R_x| beyond = %.3f (<= 0.5); f^R_y first-quarter mean R_y = %.3f vs R_x = %.3f",
               ry_min, crosses ? rx.separations[first_zero] : NAN, beyond, qy, qx));
}

void correlation_properties_check()
{
    // an integer field under an integer affine map: every operation is exact,
    // so the normalized curves must agree bit for bit
    const std::size_t n = 64;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> digits(-100, 100);
    ScalarField ints(n, n, two_pi, two_pi, SamplingMode::endpoint);
    for (double& v : ints.values())
        v = digits(rng);
    ScalarField mapped = ints;
    for (double& v : mapped.values())
        v = 3.0 * v + 7.0;
    const bool affine = correlation_x(ints).values == correlation_x(mapped).values &&
                        correlation_y(ints).values == correlation_y(mapped).values;

    const auto f = testing::random_field(96, 64, 5, SamplingMode::endpoint);
    const bool duality = correlation_x(f.transposed()).values == correlation_y(f).values &&
                         correlation_y(f.transposed()).values == correlation_x(f).values;

    bool symmetric = true;
    for (const auto& c : {correlation_x(f), correlation_y(f)})
        for (std::size_t s = 1; s < c.values.size(); ++s)
            symmetric &= c.values[s] == c.values[c.values.size() - s];

    // Monte-Carlo band: |R| < 5 / sqrt(NM) at every nonzero separation in >= 99% of trials
    const std::size_t trials = 200, m = 128;
    const double band = 5.0 / std::sqrt(static_cast<double>(m * m));
    std::size_t inside = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t)
    {
        const auto noise = testing::random_field(m, m, 5'000 + t, SamplingMode::endpoint);
        double peak = 0.0;
        for (const auto& c : {correlation_x(noise), correlation_y(noise)})
            for (std::size_t s = 1; s < c.values.size(); ++s)
                peak = std::max(peak, std::abs(c.values[s]));
        worst = std::max(worst, peak);
        inside += peak < band;
    }
    const double rate = static_cast<double>(inside) / trials;
    report(8, affine && duality && symmetric && rate >= 0.99, "correlation properties",
           fmt("affine invariance exact: %s, transpose duality exact: %s, circular symmetry exact: %s; "
               "white noise inside 5/sqrt(NM) = %.4f in %.1f%% of %zu trials (>= 99%%), worst %.4f",
               affine ? "yes" : "no", duality ? "yes" : "no", symmetric ? "yes" : "no", band, 100 * rate,
               trials, worst));
}

} // namespace

int main()
{
    extraction_error_check();
    fs_error_check();
    transform_check();
    rogallo_invariants_check();
    spectrum_recovery_check();
    filter_check();
    anisotropy_check();
    correlation_properties_check();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
