#ifndef SYNROUGH_PIPELINE_HPP
#define SYNROUGH_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "synrough/field.hpp"
#include "synrough/io.hpp"
#include "synrough/rogallo.hpp"

namespace synrough
{

enum class Variant
{
    component_x,
    component_y,
    magnitude,
    vorticity,
    enstrophy
};

inline constexpr Variant all_variants[] = {Variant::component_x, Variant::component_y,
                                           Variant::magnitude, Variant::vorticity,
                                           Variant::enstrophy};

std::string variant_name(Variant v);
/// Throws UsageError for unknown names.
Variant parse_variant(const std::string& name);

/// Effective configuration of one run. Serializes to the same `key = value`
/// form it is read from, so a written manifest can be fed back with --config.
struct RunConfig
{
    std::filesystem::path input;
    std::optional<AmplitudeRange> range;
    std::size_t samples_x = 64;
    std::size_t samples_y = 64;
    SamplingMode sampling = SamplingMode::periodic;
    double domain_x = two_pi;
    double domain_y = two_pi;
    std::vector<Variant> variants{std::begin(all_variants), std::end(all_variants)};
    int cutoff = 32;
    std::uint64_t seed = 1;
    std::size_t ensemble = 1;
    std::size_t plot_x = 500;
    std::size_t plot_y = 500;
    std::size_t correlation_samples = 128;
    std::string reference;
    std::vector<std::filesystem::path> fields;
    std::filesystem::path out = "synrough_out";

    void validate() const;

    io::KeyValues to_key_values() const;

    /// Applies entries in order on top of the defaults; later keys win.
    static RunConfig from_key_values(const io::KeyValues& entries);
};

/// Default output directory: $SYNROUGH_OUT if set, else "synrough_out".
std::filesystem::path default_output_dir();

// Each command writes into config.out (created if needed) and a manifest of the
// effective configuration, and returns the paths it wrote.

/// Image -> extracted.csv, extracted.bin, extract_summary.txt.
std::vector<std::filesystem::path> cmd_extract(const RunConfig& config);

/// Field or spectrum -> reference series, then per ensemble member and variant a
/// physical field (csv + bin), its energy spectrum, and the Rogallo spectral
/// components with a manifest.
std::vector<std::filesystem::path> cmd_synthesize(const RunConfig& config);

/// Fields -> half correlation curves (csv + svg) in x and y, a spectrum comparison
/// table and a log-scale spectrum plot, under config.out / "diagnostics".
std::vector<std::filesystem::path> cmd_diagnose(const RunConfig& config);

/// extract, synthesize and diagnose in sequence.
std::vector<std::filesystem::path> cmd_pipeline(const RunConfig& config);

} // namespace synrough

#endif // SYNROUGH_PIPELINE_HPP
