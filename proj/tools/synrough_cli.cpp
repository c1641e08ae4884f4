// synrough: extract a roughness field from an HSV-colormapped scan, synthesize
// statistically matched fields, and diagnose them.
//
// Exit codes: 0 success, 2 usage error, 3 input-data error, 4 internal invariant violation.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "synrough/error.hpp"
#include "synrough/pipeline.hpp"

namespace
{

struct Flags
{
    std::optional<std::string> config;
    std::optional<std::string> input;
    std::optional<std::string> range;
    std::optional<std::string> samples;
    bool periodic = false;
    bool non_periodic = false;
    std::optional<std::string> domain;
    std::optional<std::string> variants;
    std::optional<std::string> cutoff;
    std::optional<std::string> seed;
    std::optional<std::string> ensemble;
    std::optional<std::string> plot_res;
    std::optional<std::string> correlation_samples;
    std::optional<std::string> reference;
    std::optional<std::string> fields;
    std::optional<std::string> out;
};

void add_flags(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--config", f.config, "key = value configuration file (flags override it)");
    cmd->add_option("--input", f.input, "image (extract) or field/spectrum file (synthesize)");
    cmd->add_option("--range", f.range, "amplitude range MIN:MAX")->allow_extra_args(false);
    cmd->add_option("--samples", f.samples, "Fourier samples NxM (even)");
    auto* p = cmd->add_flag("--periodic", f.periodic, "periodic sampling (default)");
    auto* np = cmd->add_flag("--non-periodic", f.non_periodic, "endpoint-inclusive sampling");
    p->excludes(np);
    cmd->add_option("--domain", f.domain, "scaled domain lengths LXxLY");
    cmd->add_option("--variants", f.variants,
                    "comma list of component-x,component-y,magnitude,vorticity,enstrophy");
    cmd->add_option("--cutoff", f.cutoff, "vorticity top-hat cutoff |k|");
    cmd->add_option("--seed", f.seed, "base RNG seed; member e uses seed + e");
    cmd->add_option("--ensemble", f.ensemble, "number of realizations");
    cmd->add_option("--plot-res", f.plot_res, "plot resolution NxM");
    cmd->add_option("--correlation-samples", f.correlation_samples,
                    "non-periodic samples per axis for correlations");
    cmd->add_option("--reference", f.reference, "analytic reference surface, e.g. 'sin(x)+cos(2y)'");
    cmd->add_option("--fields", f.fields, "comma list of field .bin files to diagnose");
    cmd->add_option("--out", f.out, "output directory (default $SYNROUGH_OUT or synrough_out)");
}

synrough::RunConfig build_config(const Flags& f)
{
    synrough::io::KeyValues kv;
    if (f.config)
        kv = synrough::io::read_key_values(*f.config);
    auto put = [&](const char* key, const std::optional<std::string>& v) {
        if (v)
            kv.emplace_back(key, *v);
    };
    put("input", f.input);
    put("range", f.range);
    put("samples", f.samples);
    if (f.periodic)
        kv.emplace_back("sampling", "periodic");
    if (f.non_periodic)
        kv.emplace_back("sampling", "non-periodic");
    put("domain", f.domain);
    put("variants", f.variants);
    put("cutoff", f.cutoff);
    put("seed", f.seed);
    put("ensemble", f.ensemble);
    put("plot-res", f.plot_res);
    put("correlation-samples", f.correlation_samples);
    put("reference", f.reference);
    put("fields", f.fields);
    put("out", f.out);
    return synrough::RunConfig::from_key_values(kv);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Synthetic surface roughness from a single colormapped scan"};
    app.require_subcommand(1);

    Flags flags;
    auto* extract = app.add_subcommand("extract", "decode an HSV scan image into a height field");
    auto* synthesize = app.add_subcommand("synthesize", "generate Rogallo roughness fields");
    auto* diagnose = app.add_subcommand("diagnose", "correlations, spectrum comparison and plots");
    auto* pipeline = app.add_subcommand("pipeline", "extract, synthesize and diagnose");
    for (auto* cmd : {extract, synthesize, diagnose, pipeline})
        add_flags(cmd, flags);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        const synrough::RunConfig config = build_config(flags);
        std::vector<std::filesystem::path> written;
        if (extract->parsed())
            written = synrough::cmd_extract(config);
        else if (synthesize->parsed())
            written = synrough::cmd_synthesize(config);
        else if (diagnose->parsed())
            written = synrough::cmd_diagnose(config);
        else
            written = synrough::cmd_pipeline(config);
        for (const auto& p : written)
            std::cout << p.string() << '\n';
        return 0;
    }
    catch (const synrough::UsageError& e)
    {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    catch (const synrough::InputError& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 3;
    }
    catch (const synrough::InvariantError& e)
    {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    catch (const std::filesystem::filesystem_error& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
