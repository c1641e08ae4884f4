#include <doctest.h>

#include <cmath>

#include "synrough/error.hpp"
#include "synrough/field.hpp"
#include "test_support.hpp"

using namespace synrough;

TEST_CASE("sample spacing follows the sampling mode")
{
    CHECK(sample_spacing(two_pi, 64, SamplingMode::periodic) == doctest::Approx(two_pi / 64));
    CHECK(sample_spacing(two_pi, 64, SamplingMode::endpoint) == doctest::Approx(two_pi / 63));
}

TEST_CASE("sample spec validation")
{
    CHECK_NOTHROW(SampleSpec{64, 64}.validate());
    CHECK_THROWS_AS((SampleSpec{63, 64}.validate()), UsageError);
    CHECK_THROWS_AS((SampleSpec{2, 2}.validate()), UsageError);
}

TEST_CASE("interpolation reproduces nodes")
{
    const auto f = testing::random_field(9, 7, 3, SamplingMode::endpoint);
    for (std::size_t j = 0; j < f.ny(); ++j)
        for (std::size_t i = 0; i < f.nx(); ++i)
            CHECK(interpolate(f, f.x(i), f.y(j)) == f(i, j));
}

TEST_CASE("endpoint interpolation is exact for quadratics up to the boundary")
{
    auto q = [](double x, double y) { return 0.3 * x * x - 1.2 * x * y + 0.5 * y * y + x - 2.0; };
    const auto f = testing::sample_function(11, 9, q);
    for (double x : {0.0, 0.1, 3.3, 6.2, two_pi})
        for (double y : {0.0, 0.05, 2.9, two_pi})
            CHECK(interpolate(f, x, y) == doctest::Approx(q(x, y)).epsilon(1e-10));
}

TEST_CASE("periodic interpolation wraps")
{
    auto g = [](double x, double y) { return std::sin(x) * std::cos(y); };
    const auto f = testing::sample_function(64, 64, g, SamplingMode::periodic);
    CHECK(interpolate(f, two_pi, 0.0) == doctest::Approx(f(0, 0)));
    CHECK(interpolate(f, 6.25, 1.0) == doctest::Approx(g(6.25, 1.0)).epsilon(1e-4));
}

TEST_CASE("resample keeps physical lengths and hits requested positions")
{
    const auto f = testing::sample_function(200, 150, testing::test_surface);
    const auto p = resample(f, {64, 32, SamplingMode::periodic});
    CHECK(p.length_x() == f.length_x());
    CHECK(p.mode() == SamplingMode::periodic);
    CHECK(p.x(1) == doctest::Approx(two_pi / 64));
    for (std::size_t j = 0; j < p.ny(); j += 5)
        for (std::size_t i = 0; i < p.nx(); i += 7)
            CHECK(p(i, j) == doctest::Approx(testing::test_surface(p.x(i), p.y(j))).epsilon(1e-5));
}

TEST_CASE("rescale amplitude hits both endpoints exactly")
{
    const auto f = testing::random_field(16, 16, 9);
    const auto g = rescale_amplitude(f, {-0.3, 1.7});
    CHECK(g.min() == -0.3);
    CHECK(g.max() == 1.7);
    ScalarField flat(4, 4, two_pi, two_pi);
    CHECK_THROWS_AS(rescale_amplitude(flat, {0.0, 1.0}), InputError);
}

TEST_CASE("transpose swaps axes")
{
    const auto f = testing::random_field(6, 4, 1);
    const auto t = f.transposed();
    CHECK(t.nx() == 4);
    CHECK(t.ny() == 6);
    CHECK(t(3, 5) == f(5, 3));
}
