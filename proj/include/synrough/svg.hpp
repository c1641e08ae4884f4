#ifndef SYNROUGH_SVG_HPP
#define SYNROUGH_SVG_HPP

#include <string>
#include <vector>

namespace synrough::svg
{

struct Series
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions
{
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    int width = 720;
    int height = 480;
};

/// Standalone SVG line chart. On a log axis, non-positive and non-finite
/// points break the polyline instead of being drawn.
std::string line_plot(const std::vector<Series>& series, const PlotOptions& options);

} // namespace synrough::svg

#endif // SYNROUGH_SVG_HPP
