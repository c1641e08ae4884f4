#ifndef SYNROUGH_IO_HPP
#define SYNROUGH_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "synrough/colormap.hpp"
#include "synrough/diagnostics.hpp"
#include "synrough/field.hpp"
#include "synrough/spectral.hpp"

namespace synrough::io
{

namespace fs = std::filesystem;

/// PNG (8/16-bit, any color type) or binary PPM (P6) / PGM (P5). The pixel
/// grid is returned as stored, without resampling.
RgbImage load_image(const fs::path& path);

void write_ppm(const fs::path& path, const RgbImage& image);
void write_png(const fs::path& path, const RgbImage& image);

// Field files.
//
// CSV: one line per y row, N comma-separated values, %.17g.
// Binary (little endian):
//   int32[8]   magic "RFLD", version 1, N, M, flags (bit 0: periodic), 0, 0, 0
//   float64[4] f_min, f_max, L_x, L_y
//   float64[N*M] values, row-major by y

inline constexpr std::uint32_t field_magic = 0x444C4652;    // "RFLD"
inline constexpr std::uint32_t spectral_magic = 0x43505352; // "RSPC"
inline constexpr std::int32_t format_version = 1;

struct FieldFile
{
    ScalarField field;
    AmplitudeRange range;
};

void write_field_csv(const fs::path& path, const ScalarField& field);
ScalarField read_field_csv(const fs::path& path, double length_x, double length_y,
                           SamplingMode mode);

/// `range` defaults to the data min/max.
void write_field_binary(const fs::path& path, const ScalarField& field);
void write_field_binary(const fs::path& path, const ScalarField& field, const AmplitudeRange& range);
FieldFile read_field_binary(const fs::path& path);

// Spectral binary: int32[8] magic "RSPC", version, N, M, 0, 0, 0, 0;
// float64[4] L_x, L_y, scaled L_x, scaled L_y; then N*M interleaved (re, im)
// float64 pairs, rows m = -M/2+1..M/2, columns n = -N/2+1..N/2.
void write_spectral_binary(const fs::path& path, const SpectralField& spec);
SpectralField read_spectral_binary(const fs::path& path);

/// Two columns: k,E.
void write_spectrum_csv(const fs::path& path, const EnergySpectrum& spectrum);
EnergySpectrum read_spectrum_csv(const fs::path& path);

/// Two columns: r,R.
void write_correlation_csv(const fs::path& path, const CorrelationCurve& curve);

/// k, one energy column per label, then one log10 ratio column per label.
void write_comparison_csv(const fs::path& path, const SpectrumComparison& table);

/// Ordered `key = value` lines; '#' starts a comment.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

void write_key_values(const fs::path& path, const KeyValues& entries);
KeyValues read_key_values(const fs::path& path);

/// FNV-1a over the little-endian bytes of the bins.
std::uint64_t spectrum_hash(const EnergySpectrum& spectrum);

/// Writes `text` to `path`, creating parent directories.
void write_text(const fs::path& path, const std::string& text);

/// %.17g
std::string format_double(double v);

} // namespace synrough::io

#endif // SYNROUGH_IO_HPP
