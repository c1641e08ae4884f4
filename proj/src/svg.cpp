#include "synrough/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace synrough::svg
{

namespace
{

constexpr std::array<const char*, 8> palette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// 1-2-5 steps covering [lo, hi] with roughly `target` intervals.
std::vector<double> linear_ticks(double lo, double hi, int target = 6)
{
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw)
        {
            step = m * mag;
            break;
        }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step)
        ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    return ticks;
}

} // namespace

std::string line_plot(const std::vector<Series>& series, const PlotOptions& options)
{
    const double left = 80;
    const double right = 170;
    const double top = 40;
    const double bottom = 60;
    const double pw = options.width - left - right;
    const double ph = options.height - top - bottom;

    auto usable = [&](double y) { return std::isfinite(y) && (!options.log_y || y > 0.0); };
    auto ty = [&](double y) { return options.log_y ? std::log10(y) : y; };

    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo;
    double y_lo = x_lo;
    double y_hi = -x_lo;
    for (const auto& s : series)
        for (std::size_t k = 0; k < std::min(s.x.size(), s.y.size()); ++k)
        {
            if (!std::isfinite(s.x[k]) || !usable(s.y[k]))
                continue;
            x_lo = std::min(x_lo, s.x[k]);
            x_hi = std::max(x_hi, s.x[k]);
            y_lo = std::min(y_lo, ty(s.y[k]));
            y_hi = std::max(y_hi, ty(s.y[k]));
        }
    if (!std::isfinite(x_lo))
    {
        x_lo = 0;
        x_hi = 1;
        y_lo = 0;
        y_hi = 1;
    }
    if (options.log_y)
    {
        y_lo = std::floor(y_lo);
        y_hi = std::ceil(y_hi);
    }
    if (x_hi == x_lo)
        x_hi = x_lo + 1;
    if (y_hi == y_lo)
    {
        y_lo -= 0.5;
        y_hi += 0.5;
    }

    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return top + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(options.width) + "\" height=\"" +
                      std::to_string(options.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
           escape(options.title) + "</text>\n";
    out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) +
           "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    for (double t : linear_ticks(x_lo, x_hi))
    {
        out += "<line x1=\"" + num(px(t)) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px(t)) +
               "\" y2=\"" + num(top + ph + 5) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(px(t)) + "\" y=\"" + num(top + ph + 18) +
               "\" text-anchor=\"middle\">" + tick_label(t) + "</text>\n";
    }
    const auto y_ticks = options.log_y ? [&] {
        std::vector<double> t;
        const int step = std::max(1, static_cast<int>(std::ceil((y_hi - y_lo) / 8)));
        for (double e = y_lo; e <= y_hi + 1e-9; e += step)
            t.push_back(e);
        return t;
    }()
                                       : linear_ticks(y_lo, y_hi);
    for (double t : y_ticks)
    {
        const std::string label = options.log_y ? "1e" + tick_label(t) : tick_label(t);
        out += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py(t)) + "\" x2=\"" + num(left + pw) +
               "\" y2=\"" + num(py(t)) + "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py(t) + 4) +
               "\" text-anchor=\"end\">" + label + "</text>\n";
    }
    out += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(options.height - 15.0) +
           "\" text-anchor=\"middle\">" + escape(options.x_label) + "</text>\n";
    out += "<text transform=\"translate(20," + num(top + ph / 2) +
           ") rotate(-90)\" text-anchor=\"middle\">" + escape(options.y_label) + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s)
    {
        const char* color = palette[s % palette.size()];
        const auto& ser = series[s];
        std::string points;
        auto flush = [&] {
            if (!points.empty())
                out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                       "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
            points.clear();
        };
        for (std::size_t k = 0; k < std::min(ser.x.size(), ser.y.size()); ++k)
        {
            if (!std::isfinite(ser.x[k]) || !usable(ser.y[k]))
            {
                flush();
                continue;
            }
            if (!points.empty())
                points += ' ';
            points += num(px(ser.x[k])) + "," + num(py(ty(ser.y[k])));
        }
        flush();
        const double ly = top + 14 + 18.0 * static_cast<double>(s);
        out += "<line x1=\"" + num(left + pw + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" +
               num(left + pw + 36) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + num(left + pw + 42) + "\" y=\"" + num(ly + 4) + "\">" +
               escape(ser.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace synrough::svg
