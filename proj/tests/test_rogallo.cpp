#include <doctest.h>

#include <cmath>
#include <cstring>

#include "synrough/error.hpp"
#include "synrough/rogallo.hpp"
#include "test_support.hpp"

using namespace synrough;

TEST_CASE("alpha draws are bounded by the ring amplitude")
{
    AlphaGenerator gen(testing::decaying_spectrum(47), 7);
    for (int t = 0; t < 1000; ++t)
    {
        const double k = 1.0 + t % 30;
        const double bound = testing::decaying_spectrum(47).at_wavenumber(k) / (std::numbers::pi * k);
        CHECK(std::norm(gen.draw(k)) <= bound * (1.0 + 1e-15));
    }
    CHECK_THROWS_AS(gen.draw(0.0), UsageError);
}

TEST_CASE("zero-energy ring gives zero alpha")
{
    AlphaGenerator gen(EnergySpectrum{{0.0, 0.0, 0.0}}, 1);
    CHECK(gen.draw(1.0) == Complex(0.0, 0.0));
}

TEST_CASE("mean |alpha|^2 is half the ring amplitude")
{
    AlphaGenerator gen(EnergySpectrum{{0.0, 0.0, 0.0, 0.0, 5.0}}, 2024);
    const int draws = 1'000'000;
    double sum = 0.0;
    for (int t = 0; t < draws; ++t)
        sum += std::norm(gen.draw(4.0));
    const double expected = 5.0 / (2.0 * std::numbers::pi * 4.0);
    CHECK(sum / draws == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("synthesized field is divergence free, Hermitian and deterministic")
{
    const auto spec = testing::decaying_spectrum(47);
    const auto a = synthesize_vector(spec, 64, 64, 42);
    const auto b = synthesize_vector(spec, 64, 64, 42);
    for (int m = a.comp_n.m_min(); m <= a.comp_n.m_max(); ++m)
        for (int n = a.comp_n.n_min(); n <= a.comp_n.n_max(); ++n)
            CHECK((static_cast<double>(n) * a.comp_n.at(n, m) +
                   static_cast<double>(m) * a.comp_m.at(n, m)) == Complex(0.0, 0.0));
    CHECK(a.comp_n.hermitian_defect() == 0.0);
    CHECK(a.comp_m.hermitian_defect() == 0.0);
    CHECK(a.comp_n.at(0, 0) == Complex(0.0, 0.0));
    CHECK(std::memcmp(a.comp_n.coeffs().data(), b.comp_n.coeffs().data(),
                      a.comp_n.coeffs().size_bytes()) == 0);
    CHECK(std::memcmp(a.comp_m.coeffs().data(), b.comp_m.coeffs().data(),
                      a.comp_m.coeffs().size_bytes()) == 0);
    const auto c = synthesize_vector(spec, 64, 64, 43);
    CHECK(c.comp_n.coeffs()[100] != a.comp_n.coeffs()[100]);
}

TEST_CASE("synthesis preconditions")
{
    CHECK_THROWS_AS(synthesize_vector(testing::decaying_spectrum(47), 63, 64, 1), UsageError);
    CHECK_THROWS_AS(synthesize_vector(testing::decaying_spectrum(10), 64, 64, 1), UsageError);
}

TEST_CASE("one-ring spectrum excites only ring one")
{
    const auto f = synthesize_vector(EnergySpectrum{{0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0}}, 8, 8, 5);
    const auto y = component_field(f, Axis::y);
    for (int m = y.m_min(); m <= y.m_max(); ++m)
        for (int n = y.n_min(); n <= y.n_max(); ++n)
            if (radial_bin(n, m) != 1)
                CHECK(y.at(n, m) == Complex(0.0, 0.0));
}

TEST_CASE("component energy never exceeds the combined energy")
{
    const auto f = synthesize_vector(testing::decaying_spectrum(47), 64, 64, 3);
    const auto both = combined_spectrum(f);
    const auto x = energy_spectrum(f.comp_n);
    const auto y = energy_spectrum(f.comp_m);
    for (std::size_t k = 0; k < both.size(); ++k)
    {
        CHECK(x[k] <= both[k]);
        CHECK(y[k] <= both[k]);
    }
}

TEST_CASE("vorticity magnitude is |alpha| |k|")
{
    const auto f = synthesize_vector(testing::decaying_spectrum(47), 32, 32, 8);
    const auto v = vorticity_field(f);
    CHECK(v.is_hermitian(1e-15));
    for (int m = v.m_min(); m <= v.m_max(); ++m)
        for (int n = v.n_min(); n <= v.n_max(); ++n)
        {
            const double k = std::hypot(n, m);
            const double alpha = std::sqrt(std::norm(f.comp_n.at(n, m)) + std::norm(f.comp_m.at(n, m)));
            CHECK(std::abs(v.at(n, m)) == doctest::Approx(alpha * k).epsilon(1e-12));
        }
}

TEST_CASE("curl of a gradient vanishes")
{
    SpectralField gx(8, 8), gy(8, 8);
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n)
        {
            const Complex phi(1.0 / (1 + n * n + m * m), 0.0);
            gx.at(n, m) = Complex(0.0, n) * phi;
            gy.at(n, m) = Complex(0.0, m) * phi;
        }
    const auto c_field = curl(gx, gy);
    for (const Complex& c : c_field.coeffs())
        CHECK(c == Complex(0.0, 0.0));
}

TEST_CASE("top-hat filter")
{
    const auto s = dft2(testing::random_field(64, 64, 6));
    const auto f = top_hat_filter(s, {32});
    for (int m = s.m_min(); m <= s.m_max(); ++m)
        for (int n = s.n_min(); n <= s.n_max(); ++n)
        {
            if (radial_bin(n, m) >= 32)
                CHECK(f.at(n, m) == Complex(0.0, 0.0));
            else
                CHECK(f.at(n, m) == s.at(n, m));
        }
    CHECK(f.is_hermitian());

    const auto wide = top_hat_filter(s, {100});
    CHECK(std::equal(wide.coeffs().begin(), wide.coeffs().end(), s.coeffs().begin()));

    const auto one = top_hat_filter(s, {1});
    std::size_t nonzero = 0;
    for (const Complex& c : one.coeffs())
        nonzero += c != Complex(0.0, 0.0);
    CHECK(nonzero == 1);
    CHECK(one.at(0, 0) == s.at(0, 0));

    CHECK_THROWS_AS(top_hat_filter(s, {0}), UsageError);
}

TEST_CASE("magnitude of constant components")
{
    RogalloField f{SpectralField(4, 4), SpectralField(4, 4), 0};
    f.comp_n.at(0, 0) = 3.0;
    f.comp_m.at(0, 0) = 4.0;
    const auto mag = magnitude_field(f, {7, 5});
    for (double v : mag.values())
        CHECK(v == doctest::Approx(5.0));

    RogalloField zero{SpectralField(4, 4), SpectralField(4, 4), 0};
    CHECK(magnitude_field(zero, {5, 5}).max() == 0.0);
}

TEST_CASE("magnitude and enstrophy are non-negative")
{
    const auto f = synthesize_vector(testing::decaying_spectrum(47), 64, 64, 10);
    CHECK(magnitude_field(f, {100, 100}).min() >= 0.0);
    CHECK(enstrophy_field(vorticity_field(f), {100, 100}).min() >= 0.0);
}

TEST_CASE("enstrophy of a constant vorticity")
{
    SpectralField v(4, 4);
    v.at(0, 0) = -3.0;
    const auto ens = enstrophy_field(v, {6, 6});
    for (double e : ens.values())
        CHECK(e == doctest::Approx(9.0));
}

TEST_CASE("small rings recover their energy on average")
{
    // ring 4 holds 32 lattice modes against 2 pi * 4 = 25.1
    const auto spec = testing::decaying_spectrum(47);
    double sum = 0.0;
    const int seeds = 400;
    for (int s = 0; s < seeds; ++s)
        sum += combined_spectrum(synthesize_vector(spec, 64, 64, 1000 + s))[4];
    CHECK(sum / seeds == doctest::Approx(spec[4]).epsilon(0.03));
}

TEST_CASE("ring draws respect their bound")
{
    AlphaGenerator gen(EnergySpectrum{{0.0, 2.0}}, 3);
    for (int t = 0; t < 100; ++t)
        CHECK(std::norm(gen.draw_in_ring(1, 8)) <= 2.0 * 2.0 / 8.0 * (1.0 + 1e-15));
    CHECK_THROWS_AS(gen.draw_in_ring(1, 0), UsageError);
}
