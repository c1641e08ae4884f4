#include <doctest.h>

#include <cmath>

#include "synrough/colormap.hpp"
#include "synrough/diagnostics.hpp"
#include "synrough/error.hpp"
#include "test_support.hpp"

using namespace synrough;

TEST_CASE("primary colors land on sector boundaries")
{
    CHECK(rgb_to_hue(255, 0, 0) == 0.0);
    CHECK(rgb_to_hue(255, 255, 0) == doctest::Approx(1.0));
    CHECK(rgb_to_hue(0, 255, 0) == doctest::Approx(2.0));
    CHECK(rgb_to_hue(0, 255, 255) == doctest::Approx(3.0));
    CHECK(rgb_to_hue(0, 0, 255) == doctest::Approx(4.0));
    // magenta sits on the red sector's negative side
    CHECK(rgb_to_hue(255, 0, 255) == doctest::Approx(-1.0));
    CHECK(normalize_hue(-1.0) == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("achromatic pixels decode to zero")
{
    CHECK(rgb_to_hue(0, 0, 0) == 0.0);
    CHECK(rgb_to_hue(128, 128, 128) == 0.0);
    CHECK(rgb_to_hue(255, 255, 255) == 0.0);
}

TEST_CASE("out-of-range channels are rejected")
{
    CHECK_THROWS_AS(rgb_to_hue(256, 0, 0), UsageError);
    CHECK_THROWS_AS(rgb_to_hue(0, -1, 0), UsageError);
}

TEST_CASE("rescale maps the unit interval onto the range")
{
    const AmplitudeRange r{-2.0, 2.0};
    CHECK(rescale_to_amplitude(0.0, r) == -2.0);
    CHECK(rescale_to_amplitude(0.5, r) == 0.0);
    CHECK(rescale_to_amplitude(0.25, r) == -1.0);
}

TEST_CASE("colormap and decoder are inverse on every hue step")
{
    const HsvHueDecoder dec;
    for (int s = 0; s < hue_steps; ++s)
    {
        const double t = static_cast<double>(s) / hue_steps;
        const Rgb px = hsv_colormap(t);
        CHECK(dec.decode(px) == doctest::Approx(t).epsilon(1e-12));
    }
    // the top of the range must not wrap back to red
    CHECK(dec.decode(hsv_colormap(1.0)) > 0.99);
}

TEST_CASE("extraction reproduces a rendered field to quantization accuracy")
{
    const auto img = testing::render_test_surface(120, 90);
    const auto ex = extract_field(img, testing::test_range);
    CHECK(ex.values.nx() == 120);
    CHECK(ex.values.ny() == 90);
    CHECK(ex.values.mode() == SamplingMode::endpoint);
    CHECK(ex.values.y(89) == doctest::Approx(two_pi));
    // one hue step spans 4 / 1530 in height
    CHECK(extraction_error(ex.values, testing::test_surface) < 4.0 / hue_steps);
}

TEST_CASE("extraction of an empty image fails")
{
    CHECK_THROWS_AS(extract_field(RgbImage{}, {0.0, 1.0}), InputError);
}

TEST_CASE("inverted range is a usage error")
{
    CHECK_THROWS_AS(extract_field(RgbImage(2, 2), {1.0, 0.0}), UsageError);
}
