#include "synrough/colormap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "synrough/error.hpp"

namespace synrough
{

RgbImage::RgbImage(std::size_t width, std::size_t height)
    : RgbImage(width, height, std::vector<Rgb>(width * height))
{
}

RgbImage::RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels))
{
    if (pixels_.size() != width * height)
        throw UsageError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                         std::to_string(width) + "x" + std::to_string(height));
}

double rgb_to_hue(int r, int g, int b)
{
    auto check = [](int c) {
        if (c < 0 || c > 255)
            throw UsageError("color channel out of [0, 255]: " + std::to_string(c));
    };
    check(r);
    check(g);
    check(b);

    const double rn = r / 255.0;
    const double gn = g / 255.0;
    const double bn = b / 255.0;
    const double hi = std::max({rn, gn, bn});
    const double lo = std::min({rn, gn, bn});
    if (hi == lo)
        return 0.0;
    const double span = hi - lo;
    // ties resolve in red, green, blue order
    if (rn == hi)
        return (gn - bn) / span;
    if (gn == hi)
        return 2.0 + (bn - rn) / span;
    return 4.0 + (rn - gn) / span;
}

double normalize_hue(double hue)
{
    const double scaled = hue / 6.0;
    double h = scaled - std::floor(scaled);
    // -tiny / 6 can round floor-subtraction up to exactly 1
    if (h >= 1.0)
        h = 0.0;
    return h;
}

double rescale_to_amplitude(double normalized_hue, const AmplitudeRange& range)
{
    range.validate();
    return (range.max - range.min) * normalized_hue + range.min;
}

double HsvHueDecoder::decode(const Rgb& pixel) const
{
    return normalize_hue(rgb_to_hue(pixel.r, pixel.g, pixel.b));
}

Rgb hsv_colormap(double t)
{
    const double clamped = std::clamp(t, 0.0, 1.0);
    const int step = std::min(static_cast<int>(std::lround(clamped * hue_steps)), hue_steps - 1);
    const int sector = step / 255;
    const auto f = static_cast<std::uint8_t>(step % 255);
    const auto rising = f;
    const auto falling = static_cast<std::uint8_t>(255 - f);
    switch (sector)
    {
    case 0: return {255, rising, 0};
    case 1: return {falling, 255, 0};
    case 2: return {0, 255, rising};
    case 3: return {0, falling, 255};
    case 4: return {rising, 0, 255};
    default: return {255, 0, falling};
    }
}

ExtractedField extract_field(const RgbImage& image, const AmplitudeRange& range,
                             const ColormapDecoder& decoder, double length_x, double length_y)
{
    if (image.empty())
        throw InputError("cannot extract a field from an empty image");
    range.validate();

    ScalarField field(image.width(), image.height(), length_x, length_y, SamplingMode::endpoint);
    for (std::size_t row = 0; row < image.height(); ++row)
        for (std::size_t col = 0; col < image.width(); ++col)
            field(col, row) = rescale_to_amplitude(decoder.decode(image.at(col, row)), range);
    return {std::move(field), range};
}

RgbImage render_hsv(const ScalarField& field, const AmplitudeRange& range)
{
    range.validate();
    RgbImage image(field.nx(), field.ny());
    for (std::size_t j = 0; j < field.ny(); ++j)
        for (std::size_t i = 0; i < field.nx(); ++i)
            image.at(i, j) = hsv_colormap((field(i, j) - range.min) / (range.max - range.min));
    return image;
}

} // namespace synrough
