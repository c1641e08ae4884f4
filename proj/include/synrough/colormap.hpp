#ifndef SYNROUGH_COLORMAP_HPP
#define SYNROUGH_COLORMAP_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "synrough/field.hpp"

namespace synrough
{

struct Rgb
{
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// 8-bit RGB raster, row-major from the top-left pixel.
class RgbImage
{
  public:
    RgbImage() = default;
    RgbImage(std::size_t width, std::size_t height);
    RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    Rgb& at(std::size_t col, std::size_t row) { return pixels_[row * width_ + col]; }
    const Rgb& at(std::size_t col, std::size_t row) const { return pixels_[row * width_ + col]; }
    const std::vector<Rgb>& pixels() const { return pixels_; }

  private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<Rgb> pixels_;
};

/// Hue on the six-sector scale, in [-1, 5]. Achromatic pixels map to 0.
double rgb_to_hue(int r, int g, int b);

/// mod1(hue / 6), in [0, 1).
double normalize_hue(double hue);

/// (f_max - f_min) * h + f_min.
double rescale_to_amplitude(double normalized_hue, const AmplitudeRange& range);

/// Turns a pixel into a normalized colormap coordinate in [0, 1).
class ColormapDecoder
{
  public:
    virtual ~ColormapDecoder() = default;
    virtual double decode(const Rgb& pixel) const = 0;
};

class HsvHueDecoder final : public ColormapDecoder
{
  public:
    double decode(const Rgb& pixel) const override;
};

/// Number of distinct pixels on the fully saturated hue circle.
inline constexpr int hue_steps = 6 * 255;

/// Inverse of HsvHueDecoder: the hue-circle pixel closest to coordinate
/// `t` in [0, 1]. t = 1 is pinned to the last step before the circle wraps
/// back to red, so the top of the range stays distinguishable from the bottom.
Rgb hsv_colormap(double t);

struct ExtractedField
{
    ScalarField values;
    AmplitudeRange range;
};

/// Per-pixel decode and rescale. Column index becomes x, row index y;
/// pixel (0, 0) sits at the origin and rows advance +y. Nodes span the
/// closed domain [0, length_x] x [0, length_y].
ExtractedField extract_field(const RgbImage& image, const AmplitudeRange& range,
                             const ColormapDecoder& decoder = HsvHueDecoder{},
                             double length_x = two_pi, double length_y = two_pi);

/// Renders the grid of `field` through the HSV colormap over `range`,
/// the counterpart of extract_field. Values outside the range are clamped.
RgbImage render_hsv(const ScalarField& field, const AmplitudeRange& range);

} // namespace synrough

#endif // SYNROUGH_COLORMAP_HPP
