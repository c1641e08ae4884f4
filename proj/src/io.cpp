#include "synrough/io.hpp"

#include <png.h>

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "synrough/error.hpp"

namespace synrough::io
{

namespace
{

std::vector<unsigned char> slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("unreadable file: " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, mode);
    if (!out)
        throw InputError("cannot write file: " + path.string());
    return out;
}

RgbImage decode_pnm(const std::vector<unsigned char>& bytes, const fs::path& path)
{
    const bool color = bytes[1] == '6';
    std::size_t pos = 2;
    auto next_token = [&]() -> long {
        while (pos < bytes.size())
        {
            if (bytes[pos] == '#')
                while (pos < bytes.size() && bytes[pos] != '\n')
                    ++pos;
            else if (std::isspace(bytes[pos]))
                ++pos;
            else
                break;
        }
        const std::size_t start = pos;
        while (pos < bytes.size() && std::isdigit(bytes[pos]))
            ++pos;
        if (start == pos)
            throw InputError("unreadable PNM header: " + path.string());
        long v = 0;
        std::from_chars(reinterpret_cast<const char*>(&bytes[start]),
                        reinterpret_cast<const char*>(&bytes[pos]), v);
        return v;
    };
    const long width = next_token();
    const long height = next_token();
    const long maxval = next_token();
    if (width <= 0 || height <= 0)
        throw InputError("zero-dimension image: " + path.string());
    if (maxval <= 0 || maxval > 65535)
        throw InputError("unsupported PNM maxval in " + path.string());
    ++pos; // single whitespace before the raster

    const std::size_t channels = color ? 3 : 1;
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    const auto w = static_cast<std::size_t>(width);
    const auto h = static_cast<std::size_t>(height);
    if (bytes.size() < pos || bytes.size() - pos < w * h * channels * sample_bytes)
        throw InputError("unreadable file (truncated raster): " + path.string());

    auto sample = [&](std::size_t idx) -> std::uint8_t {
        const std::size_t at = pos + idx * sample_bytes;
        const long raw = sample_bytes == 2 ? (bytes[at] << 8) | bytes[at + 1] : bytes[at];
        return static_cast<std::uint8_t>(std::lround(255.0 * double(raw) / double(maxval)));
    };
    std::vector<Rgb> pixels(w * h);
    for (std::size_t k = 0; k < w * h; ++k)
    {
        if (color)
            pixels[k] = {sample(3 * k), sample(3 * k + 1), sample(3 * k + 2)};
        else
        {
            const auto v = sample(k);
            pixels[k] = {v, v, v};
        }
    }
    return {w, h, std::move(pixels)};
}

RgbImage decode_png(const std::vector<unsigned char>& bytes, const fs::path& path)
{
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
        throw InputError("unreadable PNG " + path.string() + ": " + image.message);
    if (image.width == 0 || image.height == 0)
    {
        png_image_free(&image);
        throw InputError("zero-dimension image: " + path.string());
    }
    image.format = PNG_FORMAT_RGB;
    std::vector<unsigned char> raster(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, raster.data(), 0, nullptr))
    {
        const std::string msg = image.message;
        png_image_free(&image);
        throw InputError("unreadable PNG " + path.string() + ": " + msg);
    }
    const std::size_t w = image.width;
    const std::size_t h = image.height;
    std::vector<Rgb> pixels(w * h);
    for (std::size_t k = 0; k < w * h; ++k)
        pixels[k] = {raster[3 * k], raster[3 * k + 1], raster[3 * k + 2]};
    return {w, h, std::move(pixels)};
}

void put_i32(std::string& out, std::uint32_t v)
{
    for (int b = 0; b < 4; ++b)
        out.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
}

void put_f64(std::string& out, double d)
{
    const auto v = std::bit_cast<std::uint64_t>(d);
    for (int b = 0; b < 8; ++b)
        out.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
}

class Reader
{
  public:
    Reader(std::vector<unsigned char> bytes, fs::path path)
        : bytes_(std::move(bytes)), path_(std::move(path))
    {
    }

    std::uint32_t u32()
    {
        need(4);
        std::uint32_t v = 0;
        for (int b = 0; b < 4; ++b)
            v |= std::uint32_t(bytes_[pos_++]) << (8 * b);
        return v;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    double f64()
    {
        need(8);
        std::uint64_t v = 0;
        for (int b = 0; b < 8; ++b)
            v |= std::uint64_t(bytes_[pos_++]) << (8 * b);
        return std::bit_cast<double>(v);
    }

  private:
    void need(std::size_t n) const
    {
        if (bytes_.size() - pos_ < n)
            throw InputError("unreadable file (truncated): " + path_.string());
    }

    std::vector<unsigned char> bytes_;
    fs::path path_;
    std::size_t pos_ = 0;
};

struct Header
{
    std::int32_t nx;
    std::int32_t ny;
    std::int32_t flags;
};

Header read_header(Reader& r, std::uint32_t magic, const fs::path& path)
{
    if (r.u32() != magic)
        throw InputError("not a synrough file (bad magic): " + path.string());
    const std::int32_t version = r.i32();
    if (version != format_version)
        throw InputError("unsupported format version " + std::to_string(version) + " in " +
                         path.string());
    Header h{r.i32(), r.i32(), r.i32()};
    for (int k = 0; k < 3; ++k)
        r.i32();
    if (h.nx <= 0 || h.ny <= 0)
        throw InputError("invalid dimensions in " + path.string());
    return h;
}

void write_bytes(const fs::path& path, const std::string& data)
{
    auto out = open_out(path, std::ios::binary);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

} // namespace

std::string format_double(double v)
{
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

RgbImage load_image(const fs::path& path)
{
    const auto bytes = slurp(path);
    static constexpr unsigned char png_signature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), png_signature, 8) == 0)
        return decode_png(bytes, path);
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6'))
        return decode_pnm(bytes, path);
    if (bytes.empty())
        throw InputError("unreadable file (empty): " + path.string());
    throw InputError("unsupported image format: " + path.string());
}

void write_ppm(const fs::path& path, const RgbImage& image)
{
    std::string data = "P6\n" + std::to_string(image.width()) + " " +
                       std::to_string(image.height()) + "\n255\n";
    data.reserve(data.size() + 3 * image.pixel_count());
    for (const auto& p : image.pixels())
    {
        data.push_back(static_cast<char>(p.r));
        data.push_back(static_cast<char>(p.g));
        data.push_back(static_cast<char>(p.b));
    }
    write_bytes(path, data);
}

void write_png(const fs::path& path, const RgbImage& image)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width());
    png.height = static_cast<png_uint_32>(image.height());
    png.format = PNG_FORMAT_RGB;
    std::vector<unsigned char> raster;
    raster.reserve(3 * image.pixel_count());
    for (const auto& p : image.pixels())
        raster.insert(raster.end(), {p.r, p.g, p.b});
    if (!png_image_write_to_file(&png, path.c_str(), 0, raster.data(), 0, nullptr))
        throw InputError("cannot write PNG " + path.string() + ": " + png.message);
}

void write_field_csv(const fs::path& path, const ScalarField& field)
{
    std::string text;
    for (std::size_t j = 0; j < field.ny(); ++j)
    {
        for (std::size_t i = 0; i < field.nx(); ++i)
        {
            if (i)
                text += ',';
            text += format_double(field(i, j));
        }
        text += '\n';
    }
    write_bytes(path, text);
}

ScalarField read_field_csv(const fs::path& path, double length_x, double length_y,
                           SamplingMode mode)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("unreadable file: " + path.string());
    std::vector<double> values;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        std::size_t count = 0;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
        {
            try
            {
                values.push_back(std::stod(cell));
            }
            catch (const std::exception&)
            {
                throw InputError(path.string() + ":" + std::to_string(ny + 1) +
                                 ": not a number: '" + cell + "'");
            }
            ++count;
        }
        if (ny == 0)
            nx = count;
        else if (count != nx)
            throw InputError(path.string() + ":" + std::to_string(ny + 1) + ": expected " +
                             std::to_string(nx) + " values, found " + std::to_string(count));
        ++ny;
    }
    if (ny == 0)
        throw InputError("empty field file: " + path.string());
    return {nx, ny, length_x, length_y, mode, std::move(values)};
}

void write_field_binary(const fs::path& path, const ScalarField& field)
{
    write_field_binary(path, field, AmplitudeRange{field.min(), field.max()});
}

void write_field_binary(const fs::path& path, const ScalarField& field, const AmplitudeRange& range)
{
    std::string data;
    data.reserve(64 + 8 * field.size());
    put_i32(data, field_magic);
    put_i32(data, format_version);
    put_i32(data, static_cast<std::uint32_t>(field.nx()));
    put_i32(data, static_cast<std::uint32_t>(field.ny()));
    put_i32(data, field.mode() == SamplingMode::periodic ? 1u : 0u);
    for (int k = 0; k < 3; ++k)
        put_i32(data, 0);
    put_f64(data, range.min);
    put_f64(data, range.max);
    put_f64(data, field.length_x());
    put_f64(data, field.length_y());
    for (double v : field.values())
        put_f64(data, v);
    write_bytes(path, data);
}

FieldFile read_field_binary(const fs::path& path)
{
    Reader r(slurp(path), path);
    const Header h = read_header(r, field_magic, path);
    AmplitudeRange range{r.f64(), r.f64()};
    const double lx = r.f64();
    const double ly = r.f64();
    std::vector<double> values(static_cast<std::size_t>(h.nx) * static_cast<std::size_t>(h.ny));
    for (double& v : values)
        v = r.f64();
    const auto mode = (h.flags & 1) ? SamplingMode::periodic : SamplingMode::endpoint;
    return {ScalarField(static_cast<std::size_t>(h.nx), static_cast<std::size_t>(h.ny), lx, ly, mode,
                        std::move(values)),
            range};
}

void write_spectral_binary(const fs::path& path, const SpectralField& spec)
{
    std::string data;
    data.reserve(64 + 16 * spec.coeffs().size());
    put_i32(data, spectral_magic);
    put_i32(data, format_version);
    put_i32(data, static_cast<std::uint32_t>(spec.nx()));
    put_i32(data, static_cast<std::uint32_t>(spec.ny()));
    for (int k = 0; k < 4; ++k)
        put_i32(data, 0);
    put_f64(data, spec.length_x());
    put_f64(data, spec.length_y());
    put_f64(data, spec.scaled_length_x());
    put_f64(data, spec.scaled_length_y());
    for (const auto& c : spec.coeffs())
    {
        put_f64(data, c.real());
        put_f64(data, c.imag());
    }
    write_bytes(path, data);
}

SpectralField read_spectral_binary(const fs::path& path)
{
    Reader r(slurp(path), path);
    const Header h = read_header(r, spectral_magic, path);
    const double lx = r.f64();
    const double ly = r.f64();
    const double sx = r.f64();
    const double sy = r.f64();
    SpectralField spec(static_cast<std::size_t>(h.nx), static_cast<std::size_t>(h.ny), lx, ly);
    spec.set_scaled_lengths(sx, sy);
    for (auto& c : spec.coeffs())
    {
        const double re = r.f64();
        const double im = r.f64();
        c = {re, im};
    }
    return spec;
}

void write_spectrum_csv(const fs::path& path, const EnergySpectrum& spectrum)
{
    std::string text = "k,E\n";
    for (std::size_t k = 0; k < spectrum.size(); ++k)
        text += std::to_string(k) + "," + format_double(spectrum[k]) + "\n";
    write_bytes(path, text);
}

EnergySpectrum read_spectrum_csv(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("unreadable file: " + path.string());
    EnergySpectrum out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (line.empty() || line == "k,E")
            continue;
        const auto comma = line.find(',');
        try
        {
            if (comma == std::string::npos)
                throw std::invalid_argument("missing comma");
            const auto k = std::stoul(line.substr(0, comma));
            if (k != out.bins.size())
                throw std::invalid_argument("bins must be consecutive from 0");
            out.bins.push_back(std::stod(line.substr(comma + 1)));
        }
        catch (const std::exception& e)
        {
            throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.bins.empty())
        throw InputError("empty spectrum file: " + path.string());
    return out;
}

void write_correlation_csv(const fs::path& path, const CorrelationCurve& curve)
{
    std::string text = "r,R\n";
    for (std::size_t k = 0; k < curve.values.size(); ++k)
        text += format_double(curve.separations[k]) + "," + format_double(curve.values[k]) + "\n";
    write_bytes(path, text);
}

void write_comparison_csv(const fs::path& path, const SpectrumComparison& table)
{
    std::string text = "k";
    for (const auto& l : table.labels)
        text += "," + l;
    for (const auto& l : table.labels)
        text += ",log10_" + l + "_over_" + table.labels.front();
    text += '\n';
    for (std::size_t k = 0; k < table.bin_count(); ++k)
    {
        text += std::to_string(k);
        for (const auto& s : table.spectra)
            text += "," + format_double(s[k]);
        for (const auto& r : table.log_ratios)
            text += "," + format_double(r[k]);
        text += '\n';
    }
    write_bytes(path, text);
}

void write_key_values(const fs::path& path, const KeyValues& entries)
{
    std::string text;
    for (const auto& [k, v] : entries)
        text += k + " = " + v + "\n";
    write_bytes(path, text);
}

KeyValues read_key_values(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("unreadable file: " + path.string());
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    KeyValues out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

std::uint64_t spectrum_hash(const EnergySpectrum& spectrum)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (double d : spectrum.bins)
    {
        const auto v = std::bit_cast<std::uint64_t>(d);
        for (int b = 0; b < 8; ++b)
        {
            h ^= (v >> (8 * b)) & 0xFF;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

void write_text(const fs::path& path, const std::string& text) { write_bytes(path, text); }

} // namespace synrough::io
