#ifndef SYNROUGH_FIELD_HPP
#define SYNROUGH_FIELD_HPP

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace synrough
{

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// How sample positions relate to the domain length.
///  periodic: x_i = i L / N, the far endpoint is the first sample of the next period.
///  endpoint: x_i = i L / (N - 1), both ends of [0, L] are sampled.
enum class SamplingMode
{
    periodic,
    endpoint
};

struct AmplitudeRange
{
    double min = 0.0;
    double max = 1.0;

    /// Throws UsageError unless max > min and both are finite.
    void validate() const;
};

/// Real heights on a uniform rectangular grid.
///
/// Storage is row-major with one row per y line: value (i, j) lives at
/// j * nx + i, where i indexes x and j indexes y. Node (0, 0) sits at the
/// domain origin.
class ScalarField
{
  public:
    ScalarField() = default;
    ScalarField(std::size_t nx, std::size_t ny, double length_x, double length_y,
                SamplingMode mode = SamplingMode::endpoint);
    ScalarField(std::size_t nx, std::size_t ny, double length_x, double length_y,
                SamplingMode mode, std::vector<double> values);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t size() const { return values_.size(); }
    double length_x() const { return length_x_; }
    double length_y() const { return length_y_; }
    SamplingMode mode() const { return mode_; }

    double dx() const;
    double dy() const;
    double x(std::size_t i) const { return static_cast<double>(i) * dx(); }
    double y(std::size_t j) const { return static_cast<double>(j) * dy(); }

    double& operator()(std::size_t i, std::size_t j) { return values_[j * nx_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[j * nx_ + i]; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    double min() const;
    double max() const;
    double mean() const;

    /// Same grid with x and y swapped.
    ScalarField transposed() const;

  private:
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    double length_x_ = two_pi;
    double length_y_ = two_pi;
    SamplingMode mode_ = SamplingMode::endpoint;
    std::vector<double> values_;
};

struct SampleSpec
{
    std::size_t nx = 64;
    std::size_t ny = 64;
    SamplingMode mode = SamplingMode::periodic;

    /// Both counts even and at least 4.
    void validate() const;
};

/// Sample position spacing for `count` samples over `length`.
double sample_spacing(double length, std::size_t count, SamplingMode mode);

/// Bicubic Catmull-Rom interpolation at (x, y) in [0, L_x] x [0, L_y].
///
/// Grid nodes are reproduced exactly. Periodic fields wrap their stencil;
/// endpoint fields extend it with quadratic ghost nodes
/// (f[-1] = 3 f[0] - 3 f[1] + f[2]), so polynomials up to degree two are
/// reproduced up to the boundary. Requires at least 4 x 4 nodes.
double interpolate(const ScalarField& field, double x, double y);

/// Samples the interpolant at the positions described by `spec`. The result
/// keeps the physical lengths of `field`.
ScalarField resample(const ScalarField& field, const SampleSpec& spec);

/// Affine map sending the field's (min, max) onto (range.min, range.max).
/// Both endpoints are hit exactly.
ScalarField rescale_amplitude(const ScalarField& field, const AmplitudeRange& range);

} // namespace synrough

#endif // SYNROUGH_FIELD_HPP
