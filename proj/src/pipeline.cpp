#include "synrough/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "synrough/colormap.hpp"
#include "synrough/diagnostics.hpp"
#include "synrough/error.hpp"
#include "synrough/expression.hpp"
#include "synrough/svg.hpp"

namespace synrough
{

namespace fs = std::filesystem;

std::string variant_name(Variant v)
{
    switch (v)
    {
    case Variant::component_x: return "component-x";
    case Variant::component_y: return "component-y";
    case Variant::magnitude: return "magnitude";
    case Variant::vorticity: return "vorticity";
    case Variant::enstrophy: return "enstrophy";
    }
    throw InvariantError("unknown variant");
}

Variant parse_variant(const std::string& name)
{
    for (Variant v : all_variants)
        if (variant_name(v) == name)
            return v;
    throw UsageError("unknown variant '" + name +
                     "' (expected component-x, component-y, magnitude, vorticity, enstrophy)");
}

namespace
{

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
    {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos)
            parts.push_back(item.substr(b, e - b + 1));
    }
    return parts;
}

double to_double(const std::string& key, const std::string& text)
{
    try
    {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    }
    catch (const std::exception&)
    {
        throw UsageError(key + ": not a number: '" + text + "'");
    }
}

std::uint64_t to_unsigned(const std::string& key, const std::string& text)
{
    try
    {
        std::size_t used = 0;
        if (!text.empty() && text.front() == '-')
            throw std::invalid_argument(text);
        const auto v = std::stoull(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    }
    catch (const std::exception&)
    {
        throw UsageError(key + ": not a non-negative integer: '" + text + "'");
    }
}

std::pair<std::string, std::string> split_pair(const std::string& key, const std::string& text,
                                               char sep)
{
    const auto at = text.find(sep, 1);
    if (at == std::string::npos)
        throw UsageError(key + ": expected A" + std::string(1, sep) + "B, got '" + text + "'");
    return {text.substr(0, at), text.substr(at + 1)};
}

std::string join_paths(const std::vector<fs::path>& paths)
{
    std::string out;
    for (const auto& p : paths)
        out += (out.empty() ? "" : ",") + p.string();
    return out;
}

void write_manifest(const RunConfig& config, const std::string& command,
                    std::vector<fs::path>& written)
{
    io::KeyValues kv{{"command", command}};
    for (auto& e : config.to_key_values())
        kv.push_back(e);
    const fs::path path = config.out / ("manifest_" + command + ".txt");
    io::write_key_values(path, kv);
    written.push_back(path);
}

// Fourier series of `extracted` from the configured samples, evaluated back on its own nodes.
ScalarField fourier_approximation(const ScalarField& extracted, const RunConfig& config)
{
    const ScalarField samples =
        resample(extracted, {config.samples_x, config.samples_y, config.sampling});
    return evaluate_on_grid(dft2(samples), extracted);
}

} // namespace

void RunConfig::validate() const
{
    SampleSpec{samples_x, samples_y, sampling}.validate();
    if (range)
        range->validate();
    if (!(domain_x > 0.0) || !(domain_y > 0.0))
        throw UsageError("domain lengths must be positive");
    if (variants.empty())
        throw UsageError("at least one variant is required");
    FilterSpec{cutoff}.validate();
    if (ensemble < 1)
        throw UsageError("ensemble size must be at least 1");
    if (plot_x < 1 || plot_y < 1)
        throw UsageError("plot resolution must be at least 1x1");
    if (correlation_samples < 4 || correlation_samples % 2 != 0)
        throw UsageError("correlation sample count must be even and at least 4");
    if (out.empty())
        throw UsageError("output directory must not be empty");
}

io::KeyValues RunConfig::to_key_values() const
{
    io::KeyValues kv;
    kv.emplace_back("input", input.string());
    if (range)
        kv.emplace_back("range", io::format_double(range->min) + ":" + io::format_double(range->max));
    kv.emplace_back("samples", std::to_string(samples_x) + "x" + std::to_string(samples_y));
    kv.emplace_back("sampling", sampling == SamplingMode::periodic ? "periodic" : "non-periodic");
    kv.emplace_back("domain", io::format_double(domain_x) + "x" + io::format_double(domain_y));
    std::string names;
    for (Variant v : variants)
        names += (names.empty() ? "" : ",") + variant_name(v);
    kv.emplace_back("variants", names);
    kv.emplace_back("cutoff", std::to_string(cutoff));
    kv.emplace_back("seed", std::to_string(seed));
    kv.emplace_back("ensemble", std::to_string(ensemble));
    kv.emplace_back("plot-res", std::to_string(plot_x) + "x" + std::to_string(plot_y));
    kv.emplace_back("correlation-samples", std::to_string(correlation_samples));
    kv.emplace_back("reference", reference);
    kv.emplace_back("fields", join_paths(fields));
    kv.emplace_back("out", out.string());
    return kv;
}

RunConfig RunConfig::from_key_values(const io::KeyValues& entries)
{
    RunConfig c;
    c.out = default_output_dir();
    for (const auto& [key, value] : entries)
    {
        if (key == "command")
            continue;
        if (key == "input")
            c.input = value;
        else if (key == "range")
        {
            if (value.empty())
                c.range.reset();
            else
            {
                const auto [lo, hi] = split_pair(key, value, ':');
                c.range = AmplitudeRange{to_double(key, lo), to_double(key, hi)};
            }
        }
        else if (key == "samples")
        {
            const auto [a, b] = split_pair(key, value, 'x');
            c.samples_x = to_unsigned(key, a);
            c.samples_y = to_unsigned(key, b);
        }
        else if (key == "sampling")
        {
            if (value == "periodic")
                c.sampling = SamplingMode::periodic;
            else if (value == "non-periodic")
                c.sampling = SamplingMode::endpoint;
            else
                throw UsageError("sampling: expected periodic or non-periodic, got '" + value + "'");
        }
        else if (key == "domain")
        {
            const auto [a, b] = split_pair(key, value, 'x');
            c.domain_x = to_double(key, a);
            c.domain_y = to_double(key, b);
        }
        else if (key == "variants")
        {
            c.variants.clear();
            for (const auto& name : split(value, ','))
                c.variants.push_back(parse_variant(name));
        }
        else if (key == "cutoff")
            c.cutoff = static_cast<int>(to_unsigned(key, value));
        else if (key == "seed")
            c.seed = to_unsigned(key, value);
        else if (key == "ensemble")
            c.ensemble = to_unsigned(key, value);
        else if (key == "plot-res")
        {
            const auto [a, b] = split_pair(key, value, 'x');
            c.plot_x = to_unsigned(key, a);
            c.plot_y = to_unsigned(key, b);
        }
        else if (key == "correlation-samples")
            c.correlation_samples = to_unsigned(key, value);
        else if (key == "reference")
            c.reference = value;
        else if (key == "fields")
        {
            c.fields.clear();
            for (const auto& p : split(value, ','))
                c.fields.emplace_back(p);
        }
        else if (key == "out")
            c.out = value;
        else
            throw UsageError("unknown configuration key '" + key + "'");
    }
    return c;
}

fs::path default_output_dir()
{
    if (const char* env = std::getenv("SYNROUGH_OUT"); env && *env)
        return env;
    return "synrough_out";
}

std::vector<fs::path> cmd_extract(const RunConfig& config)
{
    config.validate();
    if (config.input.empty())
        throw UsageError("extract needs --input");
    if (!config.range)
        throw UsageError("extract needs --range MIN:MAX");

    const RgbImage image = io::load_image(config.input);
    const ExtractedField extracted = extract_field(image, *config.range);
    fs::create_directories(config.out);

    std::vector<fs::path> written{config.out / "extracted.csv", config.out / "extracted.bin"};
    io::write_field_csv(written[0], extracted.values);
    io::write_field_binary(written[1], extracted.values, extracted.range);

    io::KeyValues summary{
        {"input", config.input.string()},
        {"width", std::to_string(image.width())},
        {"height", std::to_string(image.height())},
        {"range", io::format_double(extracted.range.min) + ":" + io::format_double(extracted.range.max)},
        {"min", io::format_double(extracted.values.min())},
        {"max", io::format_double(extracted.values.max())},
    };
    if (!config.reference.empty())
    {
        const SurfaceFunction ref = parse_surface(config.reference);
        summary.emplace_back("reference", config.reference);
        summary.emplace_back("epsilon_E", io::format_double(extraction_error(extracted.values, ref)));
        if (extracted.values.nx() >= 4 && extracted.values.ny() >= 4)
        {
            const ScalarField fs_values = fourier_approximation(extracted.values, config);
            summary.emplace_back(
                "epsilon_F", io::format_double(fs_error(fs_values, extracted.values,
                                                        reference_norm(extracted.values, ref))));
        }
    }
    written.push_back(config.out / "extract_summary.txt");
    io::write_key_values(written.back(), summary);
    write_manifest(config, "extract", written);
    return written;
}

namespace
{

struct SynthesisInput
{
    EnergySpectrum spectrum;
    AmplitudeRange range;
};

SynthesisInput load_synthesis_input(const RunConfig& config, std::vector<fs::path>& written)
{
    const fs::path path = config.input.empty() ? config.out / "extracted.bin" : config.input;
    if (!fs::exists(path))
        throw InputError("synthesis input not found: " + path.string());

    if (path.extension() == ".csv")
    {
        if (!config.range)
            throw UsageError("synthesizing from a spectrum needs --range MIN:MAX");
        return {io::read_spectrum_csv(path), *config.range};
    }

    const io::FieldFile file = io::read_field_binary(path);
    const AmplitudeRange range = config.range.value_or(file.range);
    const ScalarField samples =
        resample(file.field, {config.samples_x, config.samples_y, config.sampling});
    const SpectralField coeffs = dft2(samples);
    // the series period may exceed the field length (endpoint sampling); keep the ratio
    const SpectralField scaled = scale_wavenumbers(
        coeffs, config.domain_x * coeffs.length_x() / file.field.length_x(),
        config.domain_y * coeffs.length_y() / file.field.length_y());
    const EnergySpectrum spectrum = energy_spectrum(coeffs);

    const ScalarField fs_plot = idft2(scaled, {config.plot_x, config.plot_y});
    const fs::path base = config.out / "reference";
    io::write_field_csv(base.string() + ".csv", fs_plot);
    io::write_field_binary(base.string() + ".bin", fs_plot);
    io::write_spectral_binary(base.string() + ".spec", scaled);
    io::write_spectrum_csv(base.string() + "_spectrum.csv", spectrum);
    for (const char* ext : {".csv", ".bin", ".spec", "_spectrum.csv"})
        written.emplace_back(base.string() + ext);
    return {spectrum, range};
}

struct MemberResult
{
    std::vector<fs::path> written;
    std::map<Variant, EnergySpectrum> spectra;
};

MemberResult synthesize_member(const RunConfig& config, const SynthesisInput& input,
                               std::size_t member)
{
    MemberResult result;
    const std::uint64_t seed = config.seed + member;
    const RogalloField raw = synthesize_vector(input.spectrum, config.samples_x, config.samples_y, seed);
    auto scaled = [&](const SpectralField& s) {
        return scale_wavenumbers(s, config.domain_x, config.domain_y);
    };
    const RogalloField rf{scaled(raw.comp_n), scaled(raw.comp_m), seed};
    const PlotGrid plot{config.plot_x, config.plot_y};
    const FilterSpec filter{config.cutoff};

    char name[32];
    std::snprintf(name, sizeof name, "member_%03zu", member);
    const fs::path dir = config.out / name;
    fs::create_directories(dir);

    io::write_spectral_binary(dir / "rogallo_n.spec", rf.comp_n);
    io::write_spectral_binary(dir / "rogallo_m.spec", rf.comp_m);
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(io::spectrum_hash(input.spectrum)));
    io::write_key_values(dir / "rogallo.manifest", {{"seed", std::to_string(seed)},
                                                    {"N", std::to_string(config.samples_x)},
                                                    {"M", std::to_string(config.samples_y)},
                                                    {"spectrum_hash", hash},
                                                    {"comp_n", "rogallo_n.spec"},
                                                    {"comp_m", "rogallo_m.spec"}});
    for (const char* f : {"rogallo_n.spec", "rogallo_m.spec", "rogallo.manifest"})
        result.written.push_back(dir / f);

    for (Variant v : config.variants)
    {
        ScalarField field;
        EnergySpectrum spectrum;
        switch (v)
        {
        case Variant::component_x:
            field = idft2(rf.comp_n, plot);
            spectrum = energy_spectrum(rf.comp_n);
            break;
        case Variant::component_y:
            field = idft2(rf.comp_m, plot);
            spectrum = energy_spectrum(rf.comp_m);
            break;
        case Variant::magnitude:
            field = magnitude_field(rf, plot);
            spectrum = combined_spectrum(rf);
            break;
        case Variant::vorticity:
        {
            const SpectralField vort = top_hat_filter(vorticity_field(rf), filter);
            field = idft2(vort, plot);
            spectrum = energy_spectrum(vort);
            break;
        }
        case Variant::enstrophy:
        {
            // unfiltered; its spectrum comes from the enstrophy sampled on the mode grid
            const SpectralField vort = vorticity_field(rf);
            field = enstrophy_field(vort, plot);
            const ScalarField on_modes = enstrophy_field(
                vort, {config.samples_x, config.samples_y, SamplingMode::periodic});
            spectrum = energy_spectrum(dft2(on_modes));
            break;
        }
        }
        const ScalarField scaled_field = rescale_amplitude(field, input.range);
        const std::string stem = variant_name(v);
        io::write_field_csv(dir / (stem + ".csv"), scaled_field);
        io::write_field_binary(dir / (stem + ".bin"), scaled_field, input.range);
        io::write_spectrum_csv(dir / (stem + "_spectrum.csv"), spectrum);
        for (const std::string ext : {".csv", ".bin", "_spectrum.csv"})
            result.written.push_back(dir / (stem + ext));
        result.spectra[v] = std::move(spectrum);
    }
    return result;
}

} // namespace

std::vector<fs::path> cmd_synthesize(const RunConfig& config)
{
    config.validate();
    fs::create_directories(config.out);
    std::vector<fs::path> written;
    const SynthesisInput input = load_synthesis_input(config, written);

    std::vector<MemberResult> results(config.ensemble);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t e = next++; e < config.ensemble; e = next++)
        {
            try
            {
                results[e] = synthesize_member(config, input, e);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    {
        const std::size_t threads =
            std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, config.ensemble);
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    if (failure)
        std::rethrow_exception(failure);

    for (const auto& r : results)
        written.insert(written.end(), r.written.begin(), r.written.end());

    for (Variant v : config.variants)
    {
        EnergySpectrum mean{std::vector<double>(results.front().spectra.at(v).size(), 0.0)};
        for (const auto& r : results)
            for (std::size_t k = 0; k < mean.size(); ++k)
                mean.bins[k] += r.spectra.at(v)[k] / static_cast<double>(config.ensemble);
        written.push_back(config.out / ("ensemble_mean_" + variant_name(v) + "_spectrum.csv"));
        io::write_spectrum_csv(written.back(), mean);
    }
    write_manifest(config, "synthesize", written);
    return written;
}

std::vector<fs::path> cmd_diagnose(const RunConfig& config)
{
    config.validate();
    struct Entry
    {
        std::string label;
        fs::path field;
        fs::path spectrum;
    };
    std::vector<Entry> entries;
    if (!config.fields.empty())
    {
        for (const auto& f : config.fields)
        {
            if (!fs::exists(f))
                throw InputError("missing field file: " + f.string());
            entries.push_back({f.stem().string(), f,
                               f.parent_path() / (f.stem().string() + "_spectrum.csv")});
        }
    }
    else
    {
        if (fs::exists(config.out / "reference.bin"))
            entries.push_back({"reference", config.out / "reference.bin",
                               config.out / "reference_spectrum.csv"});
        for (Variant v : all_variants)
        {
            const fs::path dir = config.out / "member_000";
            const std::string stem = variant_name(v);
            if (fs::exists(dir / (stem + ".bin")))
                entries.push_back({stem, dir / (stem + ".bin"), dir / (stem + "_spectrum.csv")});
        }
    }
    if (entries.empty())
        throw InputError("no field files to diagnose under " + config.out.string());

    const fs::path dir = config.out / "diagnostics";
    fs::create_directories(dir);
    std::vector<fs::path> written;
    std::vector<svg::Series> rx_all;
    std::vector<svg::Series> ry_all;
    std::vector<std::pair<std::string, EnergySpectrum>> spectra;

    for (const auto& e : entries)
    {
        const io::FieldFile file = io::read_field_binary(e.field);
        const ScalarField sampled = resample(
            file.field, {config.correlation_samples, config.correlation_samples, SamplingMode::endpoint});
        for (Direction d : {Direction::x, Direction::y})
        {
            const CorrelationCurve curve =
                (d == Direction::x ? correlation_x(sampled) : correlation_y(sampled)).half();
            const std::string axis = d == Direction::x ? "x" : "y";
            const fs::path csv = dir / (e.label + "_R" + axis + ".csv");
            const fs::path plot = dir / (e.label + "_R" + axis + ".svg");
            io::write_correlation_csv(csv, curve);
            svg::Series series{e.label, curve.separations, curve.values};
            io::write_text(plot, svg::line_plot({series}, {"Two-point correlation R_" + axis + ": " + e.label,
                                                           "r_" + axis, "R_" + axis}));
            written.push_back(csv);
            written.push_back(plot);
            (d == Direction::x ? rx_all : ry_all).push_back(std::move(series));
        }
        if (fs::exists(e.spectrum))
            spectra.emplace_back(e.label, io::read_spectrum_csv(e.spectrum));
    }

    written.push_back(dir / "correlation_x.svg");
    io::write_text(written.back(), svg::line_plot(rx_all, {"Two-point correlation R_x", "r_x", "R_x"}));
    written.push_back(dir / "correlation_y.svg");
    io::write_text(written.back(), svg::line_plot(ry_all, {"Two-point correlation R_y", "r_y", "R_y"}));

    if (!spectra.empty())
    {
        const SpectrumComparison table = compare_spectra(spectra);
        written.push_back(dir / "spectrum_comparison.csv");
        io::write_comparison_csv(written.back(), table);
        std::vector<svg::Series> series;
        for (std::size_t s = 0; s < table.labels.size(); ++s)
        {
            svg::Series ser{table.labels[s], {}, table.spectra[s].bins};
            for (std::size_t k = 0; k < table.bin_count(); ++k)
                ser.x.push_back(static_cast<double>(k));
            series.push_back(std::move(ser));
        }
        written.push_back(dir / "spectra.svg");
        io::write_text(written.back(),
                       svg::line_plot(series, {"Energy spectrum E(|k|)", "|k|", "E", true}));
    }
    write_manifest(config, "diagnose", written);
    return written;
}

std::vector<fs::path> cmd_pipeline(const RunConfig& config)
{
    std::vector<fs::path> written = cmd_extract(config);
    RunConfig next = config;
    next.input = config.out / "extracted.bin";
    for (auto& p : cmd_synthesize(next))
        written.push_back(std::move(p));
    next.fields.clear();
    for (auto& p : cmd_diagnose(next))
        written.push_back(std::move(p));
    write_manifest(config, "pipeline", written);
    return written;
}

} // namespace synrough
